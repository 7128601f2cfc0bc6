#pragma once

// JSON encodings. Integers travel as decimal strings so that arbitrary
// precision survives; rationals as {"num", "den"} in lowest terms with a
// positive denominator.
//
//   Instance: {"x0": [{"value": "3", "prob": {"num": "1", "den": "2"}}, ...],
//              "z": [...], "k": {"num": "33", "den": "1"}}
//   Strategy: {"t": [["x", "T(x)"], ...], "delta": [["y", "d"], ...]}

#include <fstream>
#include <sstream>
#include <string>

#include "json.hpp"
#include "witsen/core.hpp"
#include "witsen/reduction.hpp"
#include "witsen/sidon.hpp"

namespace witsen {

using Json = nlohmann::ordered_json;

inline Json rational_json(const Rational& q) { return Json{{"num", num(q).str()}, {"den", den(q).str()}}; }

// Adds a decimal approximation that readers must not treat as exact.
inline Json cost_value_json(const Rational& q) {
  Json j = rational_json(q);
  std::ostringstream os;
  os.precision(17);
  os << to_double(q);
  j["approx_non_authoritative"] = os.str();
  return j;
}

namespace detail {

inline Int json_int(const Json& j, const char* what) {
  if (j.is_string()) return parse_int(j.get<std::string>());
  if (j.is_number_integer()) return Int(j.get<long long>());
  throw Error(ErrorKind::Parse, std::string(what) + ": expected an integer as decimal string");
}

inline Rational json_rational(const Json& j, const char* what) {
  if (!j.is_object() || !j.contains("num") || !j.contains("den"))
    throw Error(ErrorKind::Parse, std::string(what) + ": expected {\"num\", \"den\"}");
  return make_rational(json_int(j["num"], what), json_int(j["den"], what));
}

inline std::vector<Int> json_int_array(const Json& j, const char* what) {
  if (!j.is_array()) throw Error(ErrorKind::Parse, std::string(what) + ": expected an array");
  std::vector<Int> out;
  for (const auto& e : j) out.push_back(json_int(e, what));
  return out;
}

inline std::map<Int, Int> json_int_pairs(const Json& j, const char* what) {
  if (!j.is_array()) throw Error(ErrorKind::Parse, std::string(what) + ": expected an array of pairs");
  std::map<Int, Int> out;
  for (const auto& e : j) {
    if (!e.is_array() || e.size() != 2) throw Error(ErrorKind::Parse, std::string(what) + ": expected [key, value]");
    Int key = json_int(e[0], what);
    if (!out.emplace(key, json_int(e[1], what)).second)
      throw Error(ErrorKind::Parse, std::string(what) + ": duplicate key " + key.str());
  }
  return out;
}

inline Json int_pairs_json(const std::map<Int, Int>& m) {
  Json arr = Json::array();
  for (const auto& [k, v] : m) arr.push_back(Json::array({k.str(), v.str()}));
  return arr;
}

}  // namespace detail

inline Json to_json(const ProbMass& pm) {
  Json arr = Json::array();
  for (const auto& a : pm.atoms()) arr.push_back(Json{{"value", a.value.str()}, {"prob", rational_json(a.prob)}});
  return arr;
}

inline ProbMass prob_mass_from_json(const Json& j) {
  if (!j.is_array()) throw Error(ErrorKind::Parse, "distribution: expected an array of atoms");
  std::vector<std::pair<Int, Rational>> pairs;
  for (const auto& atom : j) {
    if (!atom.is_object() || !atom.contains("value") || !atom.contains("prob"))
      throw Error(ErrorKind::Parse, "atom: expected {\"value\", \"prob\"}");
    pairs.emplace_back(detail::json_int(atom["value"], "atom value"), detail::json_rational(atom["prob"], "atom prob"));
  }
  if (pairs.empty()) throw Error(ErrorKind::EmptySupport, "distribution has no atoms");
  return ProbMass(std::move(pairs));
}

inline Json to_json(const Instance& inst) {
  return Json{{"x0", to_json(inst.x0)}, {"z", to_json(inst.z)}, {"k", rational_json(inst.k)}};
}

inline Instance instance_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("x0") || !j.contains("z") || !j.contains("k"))
    throw Error(ErrorKind::Parse, "instance: expected keys x0, z, k");
  return Instance(prob_mass_from_json(j["x0"]), prob_mass_from_json(j["z"]), detail::json_rational(j["k"], "k"));
}

inline Json to_json(const Strategy& s) {
  return Json{{"t", detail::int_pairs_json(s.t.entries)}, {"delta", detail::int_pairs_json(s.delta.entries)}};
}

inline Strategy strategy_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("t") || !j.contains("delta"))
    throw Error(ErrorKind::Parse, "strategy: expected keys t, delta");
  return {{detail::json_int_pairs(j["t"], "t")}, {detail::json_int_pairs(j["delta"], "delta")}};
}

inline Json to_json(const CostBreakdown& c) {
  return Json{{"first_stage", cost_value_json(c.first_stage)},
              {"second_stage_unweighted", cost_value_json(c.second_stage_unweighted)},
              {"second_stage_weighted", cost_value_json(c.second_stage_weighted)},
              {"total", cost_value_json(c.total)}};
}

inline Json to_json(const SidonSet& s) {
  Json arr = Json::array();
  for (const auto& e : s.elements) arr.push_back(e.str());
  return arr;
}

inline Json to_json(const Coloring& c) {
  Json arr = Json::array();
  for (const auto& g : c.gamma) arr.push_back(g.str());
  return arr;
}

/// Reduction metadata that accompanies the instance.
inline Json sidecar_json(const ReductionOutput& r) {
  Json xs = Json::array();
  for (const auto& x : r.x_values) xs.push_back(x.str());
  return Json{{"n", r.graph.n()},
              {"edges", r.graph.edges().size()},
              {"x_values", xs},
              {"scale", r.scale.str()},
              {"sidon_base", to_json(r.sidon_base)}};
}

inline Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::Parse, "cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::Parse, path + ": " + e.what());
  }
}

}  // namespace witsen
