#pragma once

#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "ltlwb/cnf.hpp"
#include "ltlwb/formula.hpp"
#include "ltlwb/kripke.hpp"

namespace ltlwb {

// Undirected simple graph with a role label per vertex.
class Graph {
 public:
  int add_vertex(std::string role);
  // Self-loops and repeated edges are ignored.
  void add_edge(int a, int b);

  int num_vertices() const { return static_cast<int>(roles_.size()); }
  int num_edges() const { return num_edges_; }
  const std::string& role(int v) const { return roles_[v]; }
  const std::vector<int>& neighbors(int v) const { return adj_[v]; }
  bool has_edge(int a, int b) const;
  std::vector<std::pair<int, int>> edges() const;

 private:
  std::vector<std::string> roles_;
  std::vector<std::vector<int>> adj_;
  int num_edges_ = 0;
};

struct Decomposition {
  enum class Shape { path, tree };
  Shape shape = Shape::path;
  std::vector<std::vector<int>> bags;
  std::vector<std::pair<int, int>> links;

  static Decomposition path(std::vector<std::vector<int>> bags);
};

struct DecompositionViolation {
  enum class Kind { bad_vertex, missing_vertex, uncovered_edge, disconnected, bad_shape };
  Kind kind;
  int a = -1;
  int b = -1;
  std::string detail;
};

std::vector<DecompositionViolation> check_decomposition(const Graph& g, const Decomposition& d);
int width(const Decomposition& d);

struct WidthResult {
  int width;
  Decomposition decomposition;
};

constexpr int kDefaultExactLimit = 14;

WidthResult exact_pathwidth(const Graph& g, int limit = kDefaultExactLimit);
WidthResult exact_treewidth(const Graph& g, int limit = kDefaultExactLimit);
WidthResult minfill_upper(const Graph& g);
// Path decomposition from a greedy vertex-separation ordering.
WidthResult greedy_path_upper(const Graph& g);

// Fills every vertex into all bags between its first and last occurrence.
Decomposition interval_fill(std::vector<std::vector<int>> bags);

// Stretches vertex intervals of a path decomposition until its width reaches
// target. Validity is preserved; a decomposition already at or above target
// is returned unchanged.
Decomposition pad_path(Decomposition d, int target);

struct SyntaxGraph {
  Graph graph;
  std::unordered_map<const void*, int> vertex_of;  // first occurrence of each node
  std::unordered_map<std::string, int> prop_vertex;
};

SyntaxGraph syntax_graph_indexed(const Formula& f);
Graph syntax_graph(const Formula& f);
Graph primal_graph(const Cnf& c);
Graph incidence_graph(const Cnf& c);
// Underlying undirected graph of the transition relation.
Graph structure_graph(const KripkeStructure& s);

// Contracts the syntax graph of cnf_formula(c) into the incidence graph:
// merge each negation into its variable, contract each clause's disjunction
// nodes, then delete the conjunction nodes. Requires clauses of size >= 2.
bool incidence_minor_check(const Cnf& c);

std::string write_graph(const Graph& g);
Graph parse_graph(std::string_view text);
std::string write_decomposition(const Decomposition& d);
Decomposition parse_decomposition(std::string_view text);

}  // namespace ltlwb
