#include "ltlwb/reductions.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>

#include "bags.hpp"
#include "ltlwb/errors.hpp"

namespace ltlwb {

namespace detail {

void BagBuilder::star(const Formula& f) {
  std::vector<int> b{vertex(f)};
  if (f.arity() >= 1) b.push_back(vertex(f.lhs()));
  if (f.arity() == 2) b.push_back(vertex(f.rhs()));
  bags_.push_back(std::move(b));
}

void BagBuilder::subtree(const Formula& f) {
  std::vector<Formula> stack{f};
  while (!stack.empty()) {
    Formula x = stack.back();
    stack.pop_back();
    if (x.arity() == 0) {
      if (bags_.empty()) bags_.push_back({vertex(x)});
      continue;
    }
    star(x);
    if (x.arity() == 1) {
      stack.push_back(x.lhs());
    } else {
      const Formula& small = x.lhs().size() <= x.rhs().size() ? x.lhs() : x.rhs();
      const Formula& big = x.lhs().size() <= x.rhs().size() ? x.rhs() : x.lhs();
      stack.push_back(big);
      stack.push_back(small);
    }
  }
}

void BagBuilder::wrapper(const Formula& f, const std::vector<Formula>& stops) {
  if (f.arity() == 0) return;
  for (const auto& s : stops)
    if (f.node_id() == s.node_id()) return;
  star(f);
  for (int c = 0; c < f.arity(); ++c) wrapper(c == 0 ? f.lhs() : f.rhs(), stops);
}

void BagBuilder::pin_subtree(const Formula& f) {
  pin(f);
  if (f.arity() >= 1) pin_subtree(f.lhs());
  if (f.arity() == 2) pin_subtree(f.rhs());
}

Decomposition BagBuilder::filled() const {
  Decomposition d = interval_fill(bags_);
  for (const auto& p : pins_) {
    int to = p.to < 0 ? static_cast<int>(d.bags.size()) : std::min<int>(p.to, d.bags.size());
    for (int i = p.from; i < to; ++i) {
      auto& bag = d.bags[i];
      if (std::find(bag.begin(), bag.end(), p.v) == bag.end()) bag.push_back(p.v);
    }
  }
  for (auto& bag : d.bags) std::sort(bag.begin(), bag.end());
  return d;
}

void Chain::add(Formula f) {
  spine.push_back(spine.empty() ? f : Formula::conj(spine.back(), f));
  items.push_back(std::move(f));
}

Formula Chain::root() const { return spine.empty() ? empty : spine.back(); }

void Chain::emit(BagBuilder& b, int t) const {
  if (t > 0) b.star(spine[t]);
  b.subtree(items[t]);
}

}  // namespace detail

std::string Certificate::line() const {
  auto v = [](int x) { return x < 0 ? std::string("-") : std::to_string(x); };
  return "cert td=" + v(td) + " delta=" + v(delta) + " nvar=" + v(nvar) + " width=" + v(width);
}

Graph witness_graph(const ReductionOutput& out) {
  if (out.witness_of == ReductionOutput::WitnessOf::structure) {
    if (!out.mc) throw Error("structure witness without structure");
    return structure_graph(out.mc->structure);
  }
  return syntax_graph(out.formula);
}

bool source_answer_from_target(const ReductionOutput& out, bool target_answer) {
  return out.target == ReductionOutput::Target::sat ? target_answer : !target_answer;
}

}  // namespace ltlwb

namespace ltlwb {

ReductionOutput reduce_3sat_to_mc(const Cnf3& c, Temporal op, const ReductionOptions& opt) {
  if (op != Temporal::F && op != Temporal::X)
    throw InvalidInstance("3SAT reduction targets X or F");
  if (c.clauses.empty()) throw InvalidInstance("3CNF needs at least one clause");
  const int n = c.num_vars;
  for (const auto& cl : c.clauses)
    for (int l : cl)
      if (l == 0 || std::abs(l) > n) throw InvalidInstance("literal out of range");

  McInstance mc;
  KripkeStructure& s = mc.structure;
  WorldId w0 = s.add_world("w0");
  std::vector<WorldId> pos(n + 1), negw(n + 1);
  for (int i = 1; i <= n; ++i) {
    pos[i] = s.add_world("w" + std::to_string(i) + "p", {"x_" + std::to_string(i)});
    negw[i] = s.add_world("w" + std::to_string(i) + "n", {"nx_" + std::to_string(i)});
  }
  if (n >= 1) {
    s.add_edge(w0, pos[1]);
    s.add_edge(w0, negw[1]);
  } else {
    s.add_edge(w0, w0);
  }
  for (int i = 1; i < n; ++i)
    for (WorldId a : {pos[i], negw[i]})
      for (WorldId b : {pos[i + 1], negw[i + 1]}) s.add_edge(a, b);
  if (n >= 1) {
    s.add_edge(pos[n], pos[n]);
    s.add_edge(negw[n], negw[n]);
  }
  s.set_init(w0);
  mc.world = w0;

  // F !L is F of the world proposition opposite to L.
  auto falsify = [&](int l) {
    int v = std::abs(l);
    Formula p = Formula::prop((l > 0 ? "nx_" : "x_") + std::to_string(v));
    return op == Temporal::F ? Formula::finally(p) : next_n(p, v);
  };
  std::vector<Formula> terms;
  for (std::size_t j = 0; j < c.clauses.size(); ++j) {
    const auto& cl = c.clauses[j];
    Formula t = Formula::conj(falsify(cl[0]), falsify(cl[1]));
    if (!(j == 0 && opt.mutation == Mutation::drop_conjunct)) t = Formula::conj(t, falsify(cl[2]));
    terms.push_back(t);
  }
  mc.formula = disj_all(terms);

  std::vector<std::vector<int>> bags;
  if (n >= 1) bags.push_back({w0, pos[1], negw[1]});
  else bags.push_back({w0});
  for (int i = 1; i < n; ++i) bags.push_back({pos[i], pos[i + 1], negw[i], negw[i + 1]});

  ReductionOutput out;
  out.target = ReductionOutput::Target::mc;
  out.formula = mc.formula;
  out.fragment = op == Temporal::F ? FragmentSet{Temporal::F} : FragmentSet{Temporal::X};
  out.witness = Decomposition::path(std::move(bags));
  out.witness_of = ReductionOutput::WitnessOf::structure;
  out.cert.td = temporal_depth(mc.formula);
  out.cert.delta = branching_degree(mc.structure);
  out.cert.nvar = nvar(mc.formula);
  out.cert.width = width(*out.witness);
  out.mc = std::move(mc);
  return out;
}

}  // namespace ltlwb
