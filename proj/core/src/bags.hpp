#pragma once

#include <string>
#include <vector>

#include "ltlwb/formula.hpp"
#include "ltlwb/graph.hpp"

namespace ltlwb::detail {

// Collects bags over the syntax graph of a formula.
class BagBuilder {
 public:
  explicit BagBuilder(const Formula& root) : sg_(syntax_graph_indexed(root)) {}

  const Graph& graph() const { return sg_.graph; }
  int vertex(const Formula& f) const {
    if (f.op() == Op::prop) return sg_.prop_vertex.at(f.name());
    return sg_.vertex_of.at(f.node_id());
  }
  bool has_prop(const std::string& name) const { return sg_.prop_vertex.count(name) > 0; }
  Formula prop(const std::string& name) const { return Formula::prop(name); }

  // Bag holding a node and its children.
  void star(const Formula& f);
  // Stars of every node below f in pre-order, larger child last.
  void subtree(const Formula& f);
  // Stars from f downwards, not entering any of the stop nodes.
  void wrapper(const Formula& f, const std::vector<Formula>& stops);
  void bag(std::vector<int> b) { bags_.push_back(std::move(b)); }
  std::vector<int>& last() { return bags_.back(); }

  int mark() const { return static_cast<int>(bags_.size()); }
  // Adds v to every bag in [from, to) after filling; to < 0 means all bags.
  void pin(const Formula& f, int from = 0, int to = -1) { pins_.push_back({vertex(f), from, to}); }
  void pin_subtree(const Formula& f);

  // Interval fill of the collected bags, then the pinned vertices.
  Decomposition filled() const;
  Decomposition raw() const { return Decomposition::path(bags_); }

 private:
  struct Pin {
    int v;
    int from;
    int to;
  };
  SyntaxGraph sg_;
  std::vector<std::vector<int>> bags_;
  std::vector<Pin> pins_;
};

// Left-nested conjunction that remembers its spine.
struct Chain {
  std::vector<Formula> items;
  std::vector<Formula> spine;  // spine[t] = items[0] & ... & items[t]
  Formula empty = Formula::top();

  void add(Formula f);
  Formula root() const;
  // Star of the spine node for item t, then the subtree of item t.
  void emit(BagBuilder& b, int t) const;
  int size() const { return static_cast<int>(items.size()); }
};

}  // namespace ltlwb::detail
