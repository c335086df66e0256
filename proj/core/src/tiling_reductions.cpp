#include <algorithm>
#include <set>
#include <string>

#include "bags.hpp"
#include "ltlwb/errors.hpp"
#include "ltlwb/reductions.hpp"

namespace ltlwb {

namespace {

using detail::BagBuilder;
using detail::Chain;

Formula P(const std::string& s) { return Formula::prop(s); }
Formula conj(Formula a, Formula b) { return Formula::conj(std::move(a), std::move(b)); }
Formula disj(Formula a, Formula b) { return Formula::disj(std::move(a), std::move(b)); }
Formula imp(Formula a, Formula b) { return Formula::implies(std::move(a), std::move(b)); }
Formula neg(Formula a) { return Formula::neg(std::move(a)); }
Formula until(Formula a, Formula b) { return Formula::until(std::move(a), std::move(b)); }

const char* kSides[4] = {"u", "d", "l", "r"};

int side_color(const Tile& t, int side) {
  switch (side) {
    case 0: return t.up;
    case 1: return t.down;
    case 2: return t.left;
    default: return t.right;
  }
}

std::string color_prop(const std::vector<std::string>& colors, int c, int side) {
  return "c_" + colors[c] + "_" + kSides[side];
}

std::string color_prop(const std::vector<std::string>& colors, int c, int side, int i) {
  return color_prop(colors, c, side) + "_" + std::to_string(i);
}

// F a written with the requested operator.
Formula eventually(Temporal op, Formula a) {
  switch (op) {
    case Temporal::F: return Formula::finally(a);
    case Temporal::G: return neg(Formula::globally(neg(a)));
    case Temporal::U: return until(Formula::top(), a);
    default: throw InvalidInstance("operator must be F, G or U");
  }
}

void collect(const Formula& f, BagBuilder& b, std::vector<int>& out) {
  std::vector<Formula> stack{f};
  while (!stack.empty()) {
    Formula x = stack.back();
    stack.pop_back();
    out.push_back(b.vertex(x));
    if (x.arity() >= 1) stack.push_back(x.lhs());
    if (x.arity() == 2) stack.push_back(x.rhs());
  }
}

// Nodes of f outside the subtree rooted at stop.
void collect_outside(const Formula& f, const Formula& stop, BagBuilder& b, std::vector<int>& out) {
  if (f.node_id() == stop.node_id()) return;
  out.push_back(b.vertex(f));
  if (f.arity() >= 1) collect_outside(f.lhs(), stop, b, out);
  if (f.arity() == 2) collect_outside(f.rhs(), stop, b, out);
}

// Pins every node from f downwards that lies above the stop nodes.
void pin_wrapper(BagBuilder& b, const Formula& f, const std::vector<Formula>& stops) {
  for (const auto& s : stops)
    if (f.node_id() == s.node_id()) return;
  if (f.arity() == 0) return;
  b.pin(f);
  if (f.arity() >= 1) pin_wrapper(b, f.lhs(), stops);
  if (f.arity() == 2) pin_wrapper(b, f.rhs(), stops);
}

void finish_bags(std::vector<int>& bag) {
  std::sort(bag.begin(), bag.end());
  bag.erase(std::unique(bag.begin(), bag.end()), bag.end());
}

struct SquareStructure {
  McInstance mc;
  int k;
};

SquareStructure square_structure(const SquareTilingInstance& t, bool depth_props) {
  SquareStructure out{{}, t.k};
  KripkeStructure& s = out.mc.structure;
  const int k2 = t.k * t.k;
  const int nd = static_cast<int>(t.tiles.size());
  WorldId start = s.add_world("w_start");
  std::vector<std::vector<WorldId>> w(k2 + 1);
  for (int i = 1; i <= k2; ++i)
    for (int d = 0; d < nd; ++d) {
      std::vector<std::string> labels;
      for (int side = 0; side < 4; ++side)
        labels.push_back(color_prop(t.colors, side_color(t.tiles[d], side), side, i));
      if (i % t.k == 0) labels.push_back("q_border");
      if (depth_props) labels.push_back("d_" + std::to_string(i));
      w[i].push_back(s.add_world("w" + std::to_string(i) + "_" + std::to_string(d + 1), labels));
    }
  WorldId end = s.add_world("w_end", {"q_end"});
  for (WorldId x : w[1]) s.add_edge(start, x);
  for (int i = 1; i < k2; ++i)
    for (WorldId a : w[i])
      for (WorldId b : w[i + 1]) s.add_edge(a, b);
  for (WorldId x : w[k2]) s.add_edge(x, end);
  s.add_edge(end, end);
  s.set_init(start);
  out.mc.world = start;
  return out;
}

// Path decomposition with one bag per (i, c): the nodes of xi^i_c, the
// adjacent nodes of the color conjunction, the wrapper of item i in the last
// bag of each row, and the outer spine plus root in every bag.
Decomposition square_bags(BagBuilder& b, const Formula& root, const Chain& outer,
                          const std::vector<Chain>& colors_of_item) {
  std::vector<int> common{b.vertex(root)};
  for (int t = 1; t < outer.size(); ++t) common.push_back(b.vertex(outer.spine[t]));
  std::vector<std::vector<int>> bags;
  for (int i = 0; i < outer.size(); ++i) {
    const Chain& ch = colors_of_item[i];
    for (int c = 0; c < ch.size(); ++c) {
      std::vector<int> bag = common;
      collect(ch.items[c], b, bag);
      if (c > 0) bag.push_back(b.vertex(ch.spine[c]));
      if (c + 1 < ch.size()) bag.push_back(b.vertex(ch.spine[c + 1]));
      if (c + 1 == ch.size()) collect_outside(outer.items[i], ch.root(), b, bag);
      finish_bags(bag);
      bags.push_back(std::move(bag));
    }
  }
  if (bags.empty()) {
    std::vector<int> all(b.graph().num_vertices());
    for (int v = 0; v < b.graph().num_vertices(); ++v) all[v] = v;
    bags.push_back(all);
  }
  return Decomposition::path(std::move(bags));
}

ReductionOutput finish_mc(McInstance mc, FragmentSet fragment, Decomposition witness) {
  ReductionOutput out;
  out.target = ReductionOutput::Target::mc;
  out.formula = mc.formula;
  out.fragment = fragment;
  out.witness = std::move(witness);
  out.witness_of = ReductionOutput::WitnessOf::formula;
  out.cert.td = temporal_depth(mc.formula);
  out.cert.delta = branching_degree(mc.structure);
  out.cert.nvar = nvar(mc.formula);
  out.cert.width = width(*out.witness);
  out.mc = std::move(mc);
  return out;
}

}  // namespace

ReductionOutput reduce_sqtiling_to_mc_x(const SquareTilingInstance& t, const ReductionOptions& opt) {
  t.validate();
  SquareStructure ss = square_structure(t, false);
  const int k = t.k, k2 = k * k;
  const int nc = static_cast<int>(t.colors.size());
  auto c = [&](int color, int side, int i) { return P(color_prop(t.colors, color, side, i)); };

  Chain outer;
  std::vector<Chain> rows(k2);
  for (int i = 1; i <= k2; ++i) {
    Chain& ch = rows[i - 1];
    for (int col = 0; col < nc; ++col) {
      Formula right = disj(P("q_border"),
                           imp(c(col, 3, i), Formula::next(disj(P("q_end"), c(col, 2, i + 1)))));
      Formula down = imp(c(col, 1, i), next_n(disj(P("q_end"), c(col, 0, i + k)), k));
      ch.add(opt.mutation == Mutation::drop_conjunct ? right : conj(right, down));
    }
    outer.add(next_n(ch.root(), i));
  }
  Formula psi = outer.root();
  ss.mc.formula = neg(psi);
  BagBuilder b(ss.mc.formula);
  Decomposition d = square_bags(b, ss.mc.formula, outer, rows);
  return finish_mc(std::move(ss.mc), FragmentSet{Temporal::X}, std::move(d));
}

ReductionOutput reduce_sqtiling_to_mc_t(const SquareTilingInstance& t, Temporal op,
                                        const ReductionOptions& opt) {
  t.validate();
  if (op != Temporal::F && op != Temporal::G && op != Temporal::U)
    throw InvalidInstance("operator must be F, G or U");
  SquareStructure ss = square_structure(t, true);
  const int k = t.k, k2 = k * k;
  const int nc = static_cast<int>(t.colors.size());
  auto c = [&](int color, int side, int i) { return P(color_prop(t.colors, color, side, i)); };

  Chain outer;
  std::vector<Chain> rows(std::max(k2 - 1, 0));
  for (int i = 1; i <= k2 - 1; ++i) {
    Chain& ch = rows[i - 1];
    for (int col = 0; col < nc; ++col) {
      Formula right = disj(P("q_border"), imp(c(col, 3, i), eventually(op, c(col, 2, i + 1))));
      Formula down = i + k <= k2 ? imp(c(col, 1, i), eventually(op, c(col, 0, i + k)))
                                 : Formula::top();
      ch.add(opt.mutation == Mutation::drop_conjunct ? right : conj(right, down));
    }
    outer.add(eventually(op, conj(P("d_" + std::to_string(i)), ch.root())));
  }
  Formula psi = outer.root();
  ss.mc.formula = neg(psi);
  BagBuilder b(ss.mc.formula);
  Decomposition d = square_bags(b, ss.mc.formula, outer, rows);
  FragmentSet frag;
  frag.insert(op);
  return finish_mc(std::move(ss.mc), frag, std::move(d));
}

namespace {

McInstance rect_structure(const RectTilingInstance& t, bool indexed, bool depth_props) {
  McInstance mc;
  KripkeStructure& s = mc.structure;
  const int n = t.width();
  WorldId left = s.add_world("w_left", {"q_left"});
  std::vector<std::vector<WorldId>> w(n + 1);
  for (int i = 1; i <= n; ++i)
    for (int d = 0; d < n; ++d) {
      std::vector<std::string> labels;
      for (int side = 0; side < 4; ++side)
        labels.push_back(color_prop(t.colors, side_color(t.tiles[d], side), side));
      if (indexed)
        for (int side = 0; side < 4; ++side)
          labels.push_back(color_prop(t.colors, side_color(t.tiles[d], side), side, i));
      if (depth_props) labels.push_back("d_" + std::to_string(i));
      w[i].push_back(s.add_world("w" + std::to_string(i) + "_" + std::to_string(d + 1), labels));
    }
  WorldId right = s.add_world("w_right", {"q_right"});
  WorldId end = s.add_world("w_end", {"q_end"});
  for (WorldId x : w[1]) s.add_edge(left, x);
  for (int i = 1; i < n; ++i)
    for (WorldId a : w[i])
      for (WorldId b : w[i + 1]) s.add_edge(a, b);
  for (WorldId x : w[n]) s.add_edge(x, right);
  s.add_edge(right, end);
  s.add_edge(right, left);
  s.add_edge(end, end);
  s.set_init(left);
  mc.world = left;
  return mc;
}

}  // namespace

ReductionOutput reduce_recttiling_to_mc_xf(const RectTilingInstance& t, const ReductionOptions& opt) {
  t.validate();
  McInstance mc = rect_structure(t, false, false);
  const int n = t.width();
  const int nc = static_cast<int>(t.colors.size());
  auto c = [&](int color, int side) { return P(color_prop(t.colors, color, side)); };

  Chain first;
  for (int i = 1; i <= n; ++i) first.add(next_n(c(t.c0, 0), i));
  Chain bottom;
  for (int i = 1; i <= n; ++i) bottom.add(next_n(c(t.c1, 1), i));
  Formula last_body = conj(conj(P("q_left"), next_n(P("q_end"), n + 2)), bottom.root());
  Formula last = Formula::finally(last_body);
  Chain local;
  for (int col = 0; col < nc; ++col) {
    Formula right = imp(c(col, 3), Formula::next(disj(P("q_right"), c(col, 2))));
    Formula down = imp(c(col, 1), next_n(disj(P("q_end"), c(col, 0)), n + 2));
    local.add(conj(right, down));
  }
  Formula always = neg(Formula::finally(neg(local.root())));
  Formula head = opt.mutation == Mutation::drop_conjunct ? first.root() : conj(first.root(), last);
  Formula psi = conj(head, always);
  mc.formula = neg(psi);

  BagBuilder b(mc.formula);
  // Boundary propositions and the constant-size wrapper go into every bag.
  for (const char* g : {"q_left", "q_right", "q_end"})
    if (b.has_prop(g)) b.pin(b.prop(g));
  for (const auto& g : {c(t.c0, 0), c(t.c1, 1)})
    if (b.has_prop(g.name())) b.pin(b.prop(g.name()));
  b.wrapper(mc.formula, {first.root(), last_body, local.root()});
  pin_wrapper(b, mc.formula, {first.root(), last_body, local.root()});
  if (opt.mutation != Mutation::drop_conjunct) {
    b.wrapper(last_body, {bottom.root(), last_body.lhs().rhs()});
    pin_wrapper(b, last_body, {bottom.root(), last_body.lhs().rhs()});
  }
  for (int i = 0; i < first.size(); ++i) first.emit(b, i);
  if (opt.mutation != Mutation::drop_conjunct) {
    b.subtree(last_body.lhs().rhs());
    for (int i = 0; i < bottom.size(); ++i) bottom.emit(b, i);
  }
  for (int i = 0; i < local.size(); ++i) local.emit(b, i);
  return finish_mc(std::move(mc), FragmentSet{Temporal::X, Temporal::F},
                   pad_path(b.filled(), kRectXfWitnessWidth));
}

ReductionOutput reduce_recttiling_to_mc_u(const RectTilingInstance& t, const ReductionOptions& opt) {
  t.validate();
  const bool printed = opt.fidelity == Fidelity::as_printed;
  McInstance mc = rect_structure(t, true, !printed);
  const int n = t.width();
  const int nc = static_cast<int>(t.colors.size());
  auto c = [&](int color, int side) { return P(color_prop(t.colors, color, side)); };
  auto ci = [&](int color, int side, int i) { return P(color_prop(t.colors, color, side, i)); };

  Formula first = until(disj(P("q_left"), c(t.c0, 0)), P("q_right"));
  Formula last_body = conj(P("q_left"), until(disj(P("q_left"), c(t.c1, 1)), P("q_right")));
  Formula last = until(Formula::top(), last_body);
  Chain columns;
  std::vector<Chain> per_column(n);
  for (int i = 1; i <= n; ++i) {
    Chain& ch = per_column[i - 1];
    for (int col = 0; col < nc; ++col) {
      Formula right_goal = printed ? ci(col, 2, i + 1) : disj(P("q_right"), ci(col, 2, i + 1));
      Formula right = imp(ci(col, 3, i), until(ci(col, 3, i), right_goal));
      Formula down;
      if (printed) {
        down = imp(ci(col, 1, i),
                   until(ci(col, 1, i),
                         until(neg(ci(col, 1, i)), disj(P("q_end"), ci(col, 0, i)))));
      } else {
        Formula di = P("d_" + std::to_string(i));
        Formula rest = until(neg(P("d_" + std::to_string(i))), disj(P("q_end"), ci(col, 0, i)));
        down = imp(ci(col, 1, i), until(ci(col, 1, i), conj(neg(di), rest)));
      }
      ch.add(conj(right, down));
    }
    columns.add(ch.root());
  }
  Formula always = neg(until(Formula::top(), neg(columns.root())));
  Formula head = opt.mutation == Mutation::drop_conjunct ? first : conj(first, last);
  Formula psi = conj(head, always);
  mc.formula = neg(psi);

  BagBuilder b(mc.formula);
  for (const char* g : {"q_left", "q_right", "q_end"})
    if (b.has_prop(g)) b.pin(b.prop(g));
  for (const auto& g : {c(t.c0, 0), c(t.c1, 1)})
    if (b.has_prop(g.name())) b.pin(b.prop(g.name()));
  b.wrapper(mc.formula, {columns.root()});
  pin_wrapper(b, mc.formula, {columns.root()});
  for (int i = 0; i < columns.size(); ++i) {
    int from = b.mark();
    if (i > 0) b.star(columns.spine[i]);
    const Chain& ch = per_column[i];
    for (int col = 0; col < ch.size(); ++col) ch.emit(b, col);
    std::string di = "d_" + std::to_string(i + 1);
    if (b.has_prop(di)) b.pin(b.prop(di), from, b.mark());
  }
  return finish_mc(std::move(mc), FragmentSet{Temporal::U}, pad_path(b.filled(), kRectUWitnessWidth));
}

}  // namespace ltlwb
