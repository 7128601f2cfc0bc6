// witsen: command-line front end for the discrete Witsenhausen toolkit.
//
// Exit codes: 0 success, 1 verification failure, 2 input error,
// 3 exact-search budget exceeded.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "witsen/approx.hpp"
#include "witsen/bench.hpp"
#include "witsen/exact.hpp"
#include "witsen/json_io.hpp"
#include "witsen/reduction.hpp"
#include "witsen/sidon.hpp"
#include "witsen/verify.hpp"

namespace {

using namespace witsen;

enum ExitCode { kOk = 0, kVerifyFailed = 1, kInputError = 2, kBudgetExceeded = 3 };

struct Globals {
  std::uint64_t seed = 7;
  std::string output;
  std::string format;
};

void emit(const Globals& g, const std::string& text) {
  if (g.output.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(g.output, std::ios::binary);
  if (!out) throw Error(ErrorKind::Parse, "cannot write " + g.output);
  out << text;
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorKind::Parse, "cannot write " + path);
  out << text;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

Graph load_graph(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::Parse, "cannot open " + path);
  return parse_dimacs(in);
}

std::string cost_table(const CostBreakdown& c) {
  std::ostringstream os;
  os << "first_stage            " << to_string(c.first_stage) << '\n'
     << "second_stage_weighted  " << to_string(c.second_stage_weighted) << '\n'
     << "total                  " << to_string(c.total) << '\n';
  return os.str();
}

std::string strategy_table(const Strategy& s) {
  std::ostringstream os;
  os << "T:\n";
  for (const auto& [x, tx] : s.t.entries) os << "  " << x << " -> " << tx << '\n';
  os << "delta:\n";
  for (const auto& [y, d] : s.delta.entries) os << "  " << y << " -> " << d << '\n';
  return os.str();
}

std::string per_k_csv(const ApproxResult& a) {
  std::ostringstream os;
  os << "k,total_num,total_den\n";
  for (const auto& [k, c] : a.per_k_costs) os << k << ',' << num(c) << ',' << den(c) << '\n';
  return os.str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Discrete Witsenhausen toolkit: exact costs, approximation, hardness reductions"};
  app.require_subcommand(1);
  app.fallthrough();

  Globals g;
  app.add_option("--seed", g.seed, "Random seed for verify/bench")->capture_default_str();
  app.add_option("--output", g.output, "Write the primary output to this path");
  app.add_option("--format", g.format, "Output format")->check(CLI::IsMember({"json", "table", "csv"}));

  // sidon
  auto* sidon = app.add_subcommand("sidon", "Greedy order-4 Sidon set with k elements");
  int sidon_k = 1, sidon_order = 4;
  sidon->add_option("--k", sidon_k, "Number of elements")->required();
  sidon->add_option("--order", sidon_order, "Sidon order (only 4 is constructed)")->capture_default_str();

  // reduce
  auto* reduce = app.add_subcommand("reduce", "Build the Witsenhausen instance of a graph");
  std::string graph_path, sidecar_path;
  reduce->add_option("--graph", graph_path, "DIMACS edge-list file")->required();
  reduce->add_option("--sidecar", sidecar_path, "Path for x_values / scale / Sidon base JSON");

  // l2chrom
  auto* l2 = app.add_subcommand("l2chrom", "Exact l2-chromatic number by brute force");
  int l2_max_n = 6;
  l2->add_option("--graph", graph_path, "DIMACS edge-list file")->required();
  l2->add_option("--max-n", l2_max_n, "Vertex limit for the brute force")->capture_default_str();

  // solve-approx
  auto* approx = app.add_subcommand("solve-approx", "Run the |X|^3|Z|^4 approximation algorithm");
  std::string instance_path;
  bool emit_per_k = false;
  approx->add_option("--instance", instance_path, "Instance JSON")->required();
  approx->add_flag("--emit-per-k", emit_per_k, "Append the per-k cost table as CSV");

  // solve-exact
  auto* exact = app.add_subcommand("solve-exact", "Exhaustive exact optimum inside certified windows");
  std::uint64_t budget = 20'000'000;
  exact->add_option("--instance", instance_path, "Instance JSON")->required();
  exact->add_option("--budget", budget, "Maximum number of transport maps")->capture_default_str();

  // eval
  auto* eval = app.add_subcommand("eval", "Exact cost of a strategy on an instance");
  std::string strategy_path;
  eval->add_option("--instance", instance_path, "Instance JSON")->required();
  eval->add_option("--strategy", strategy_path, "Strategy JSON")->required();

  // verify
  auto* verify = app.add_subcommand("verify", "Run the desk-scale property checks");
  std::string scope_name = "all";
  VerifyLimits limits;
  int max_n = -1;
  verify->add_option("scope", scope_name, "sidon | sandwich | reduction | ratio | all")
      ->check(CLI::IsMember({"sidon", "sandwich", "reduction", "ratio", "all"}))
      ->capture_default_str();
  verify->add_option("--max-k", limits.sidon_max_k, "Largest Sidon size")->capture_default_str();
  verify->add_option("--max-n", max_n, "Vertex limit for the selected graph scope");
  verify->add_option("--sandwich-max-n", limits.sandwich_max_n)->capture_default_str();
  verify->add_option("--reduction-max-n", limits.reduction_max_n)->capture_default_str();
  verify->add_option("--zsupport-max-n", limits.zsupport_max_n)->capture_default_str();
  verify->add_option("--trials", limits.ratio_trials, "Random instances for the ratio checks")->capture_default_str();
  verify->add_option("--budget", limits.budget, "Exact-search budget per instance")->capture_default_str();

  // bench
  auto* bench = app.add_subcommand("bench", "Approximation vs exact optimum over a random family (CSV)");
  BenchSpec bspec;
  int x_range = -1;
  std::string fixed_k;
  bench->add_option("--n", bspec.n, "|X0|")->capture_default_str();
  bench->add_option("--z-size", bspec.z_size, "|Z|")->capture_default_str();
  bench->add_option("--trials", bspec.trials)->capture_default_str();
  bench->add_option("--x-range", x_range, "X0 values from [-r, r] (default max(20, n))");
  bench->add_option("--z-range", bspec.family.z_range)->capture_default_str();
  bench->add_option("--max-weight", bspec.family.max_weight)->capture_default_str();
  bench->add_option("--k", fixed_k, "Fixed weight K (default cycles 1, 10, n^5+1)");
  bench->add_option("--budget", bspec.budget)->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? kOk : kInputError;
  }

  try {
    if (*sidon) {
      if (sidon_order != 4) throw Error(ErrorKind::InvalidArgument, "only order-4 Sidon sets are constructed");
      emit(g, dump(to_json(construct_sidon(sidon_k))));
    } else if (*reduce) {
      ReductionOutput r = graph_to_instance(load_graph(graph_path));
      if (g.output.empty() && sidecar_path.empty()) {
        emit(g, dump(Json{{"instance", to_json(r.instance)}, {"sidecar", sidecar_json(r)}}));
      } else {
        emit(g, dump(to_json(r.instance)));
        write_file(sidecar_path.empty() ? g.output + ".sidecar.json" : sidecar_path, dump(sidecar_json(r)));
      }
    } else if (*l2) {
      OracleLimits lim;
      lim.max_vertices = l2_max_n;
      L2ChromaticResult res = l2_chromatic_bruteforce(load_graph(graph_path), lim);
      emit(g, dump(Json{{"gamma_star", rational_json(res.gamma_star)}, {"witness", to_json(res.witness)}}));
    } else if (*approx) {
      Instance inst = instance_from_json(read_json_file(instance_path));
      ApproxResult a = algorithm1(inst);
      std::string text;
      if (g.format == "csv") {
        text = per_k_csv(a);
      } else if (g.format == "table") {
        text = "best_k " + std::to_string(a.best_k) + "\n" + strategy_table(a.strategy) + cost_table(a.cost);
        if (emit_per_k) text += "\n" + per_k_csv(a);
      } else {
        text = dump(Json{{"best_k", a.best_k}, {"strategy", to_json(a.strategy)}, {"cost", to_json(a.cost)}});
        if (emit_per_k) text += "\n" + per_k_csv(a);
      }
      emit(g, text);
    } else if (*exact) {
      Instance inst = instance_from_json(read_json_file(instance_path));
      ExactOptions opts;
      opts.budget = budget;
      ExactResult e = exact_optimum(inst, opts);
      if (g.format == "table") {
        emit(g, strategy_table(e.strategy) + cost_table(e.cost) + "explored               " +
                    std::to_string(e.explored) + "\n");
      } else {
        Json window = Json::array();
        for (const auto& w : e.window) window.push_back(w.str());
        emit(g, dump(Json{{"strategy", to_json(e.strategy)},
                          {"cost", to_json(e.cost)},
                          {"explored", e.explored},
                          {"upper_bound", rational_json(e.upper_bound)},
                          {"window", window}}));
      }
    } else if (*eval) {
      Instance inst = instance_from_json(read_json_file(instance_path));
      Strategy s = strategy_from_json(read_json_file(strategy_path));
      CostBreakdown c = evaluate_cost(inst, s);
      emit(g, g.format == "table" ? cost_table(c) : dump(to_json(c)));
    } else if (*verify) {
      VerifyScope scope = VerifyScope::All;
      if (scope_name == "sidon") scope = VerifyScope::Sidon;
      if (scope_name == "sandwich") scope = VerifyScope::Sandwich;
      if (scope_name == "reduction") scope = VerifyScope::Reduction;
      if (scope_name == "ratio") scope = VerifyScope::Ratio;
      if (max_n >= 0) {
        if (scope == VerifyScope::Sandwich) limits.sandwich_max_n = max_n;
        if (scope == VerifyScope::Reduction) limits.reduction_max_n = max_n;
      }
      VerifyReport rep = run_verify(scope, limits, g.seed);
      if (g.format == "json") {
        Json j = to_json(rep);
        j["scope"] = scope_name;
        j["seed"] = g.seed;
        emit(g, dump(j));
      } else {
        std::ostringstream os;
        write_table(os, rep);
        emit(g, os.str());
      }
      return rep.all_pass() ? kOk : kVerifyFailed;
    } else if (*bench) {
      bspec.seed = g.seed;
      bspec.family.x_range = x_range >= 0 ? x_range : std::max(20, bspec.n);
      if (!fixed_k.empty()) bspec.fixed_k = parse_rational(fixed_k);
      std::ostringstream os;
      run_bench(bspec, os);
      emit(g, os.str());
    }
  } catch (const BudgetExceeded& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kBudgetExceeded;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInputError;
  }
  return kOk;
}
