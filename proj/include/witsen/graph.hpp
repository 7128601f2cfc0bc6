#pragma once

// Simple undirected graphs on vertices 1..n, DIMACS-style edge-list I/O and
// exhaustive enumeration of small labeled graphs.

#include <cstdint>
#include <istream>
#include <ostream>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "witsen/error.hpp"
#include "witsen/rational.hpp"

namespace witsen {

class Graph {
 public:
  using Edge = std::pair<int, int>;  // first < second

  explicit Graph(int n = 0) : n_(n) {
    if (n < 0) throw Error(ErrorKind::InvalidArgument, "negative vertex count");
  }

  Graph(int n, const std::vector<Edge>& edges) : Graph(n) {
    for (auto [i, j] : edges) add_edge(i, j);
  }

  void add_edge(int i, int j) {
    if (i == j) throw Error(ErrorKind::InvalidArgument, "self-loop at vertex " + std::to_string(i));
    if (i < 1 || j < 1 || i > n_ || j > n_)
      throw Error(ErrorKind::InvalidArgument, "edge {" + std::to_string(i) + "," + std::to_string(j) + "} out of range");
    edges_.insert(i < j ? Edge{i, j} : Edge{j, i});
  }

  int n() const noexcept { return n_; }
  const std::set<Edge>& edges() const noexcept { return edges_; }
  bool adjacent(int i, int j) const { return edges_.count(i < j ? Edge{i, j} : Edge{j, i}) > 0; }

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  int n_;
  std::set<Edge> edges_;
};

/// Vertex-indexed colors; gamma[i - 1] is the color of vertex i.
struct Coloring {
  std::vector<Int> gamma;

  friend bool operator==(const Coloring&, const Coloring&) = default;
};

inline bool is_proper(const Graph& g, const Coloring& c) {
  if (static_cast<int>(c.gamma.size()) != g.n()) return false;
  for (auto [i, j] : g.edges())
    if (c.gamma[i - 1] == c.gamma[j - 1]) return false;
  return true;
}

/// (1/n) * sum of squared colors.
inline Rational coloring_score(const Coloring& c) {
  if (c.gamma.empty()) return 0;
  Int sum = 0;
  for (const auto& v : c.gamma) sum += v * v;
  return Rational(sum, static_cast<long long>(c.gamma.size()));
}

// Format: comment lines start with 'c', one header `p edge <n> <m>`, then m
// lines `e <i> <j>`. Duplicate edges (either orientation) collapse.
inline Graph parse_dimacs(std::istream& in) {
  std::string line;
  bool have_header = false;
  long long declared_edges = 0, seen_edges = 0;
  Graph g;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::istringstream ls(line);
    std::string tag;
    if (!(ls >> tag) || tag == "c") continue;
    auto fail = [&](const std::string& why) {
      throw Error(ErrorKind::Parse, "graph line " + std::to_string(lineno) + ": " + why);
    };
    if (tag == "p") {
      std::string kind;
      long long n = 0;
      if (have_header) fail("duplicate header");
      if (!(ls >> kind >> n >> declared_edges) || n < 0 || declared_edges < 0) fail("expected 'p edge <n> <m>'");
      if (kind != "edge" && kind != "col") fail("unknown problem type '" + kind + "'");
      g = Graph(static_cast<int>(n));
      have_header = true;
    } else if (tag == "e") {
      if (!have_header) fail("edge before header");
      int i = 0, j = 0;
      if (!(ls >> i >> j)) fail("expected 'e <i> <j>'");
      try {
        g.add_edge(i, j);
      } catch (const Error& e) {
        fail(e.what());
      }
      ++seen_edges;
    } else {
      fail("unknown line tag '" + tag + "'");
    }
  }
  if (!have_header) throw Error(ErrorKind::Parse, "missing 'p edge' header");
  if (seen_edges != declared_edges)
    throw Error(ErrorKind::Parse, "header declares " + std::to_string(declared_edges) + " edges, found " +
                                      std::to_string(seen_edges));
  return g;
}

inline Graph parse_dimacs(const std::string& text) {
  std::istringstream in(text);
  return parse_dimacs(in);
}

inline void write_dimacs(std::ostream& out, const Graph& g) {
  out << "p edge " << g.n() << ' ' << g.edges().size() << '\n';
  for (auto [i, j] : g.edges()) out << "e " << i << ' ' << j << '\n';
}

/// Every labeled graph on n vertices, in order of the edge bitmask over the
/// pairs (1,2), (1,3), ..., (n-1,n).
inline std::vector<Graph> all_graphs(int n) {
  std::vector<Graph::Edge> pairs;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) pairs.emplace_back(i, j);
  if (pairs.size() > 20) throw Error(ErrorKind::TooLarge, "too many labeled graphs to enumerate");

  std::vector<Graph> out;
  for (std::uint32_t mask = 0; mask < (1u << pairs.size()); ++mask) {
    Graph g(n);
    for (std::size_t b = 0; b < pairs.size(); ++b)
      if (mask & (1u << b)) g.add_edge(pairs[b].first, pairs[b].second);
    out.push_back(std::move(g));
  }
  return out;
}

/// Short identifier such as "n4:1-2,1-3,2-4".
inline std::string graph_id(const Graph& g) {
  std::string s = "n" + std::to_string(g.n()) + ":";
  bool first = true;
  for (auto [i, j] : g.edges()) {
    if (!first) s += ',';
    s += std::to_string(i) + "-" + std::to_string(j);
    first = false;
  }
  if (first) s += "empty";
  return s;
}

}  // namespace witsen
