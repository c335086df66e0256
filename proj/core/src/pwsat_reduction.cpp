#include <algorithm>
#include <cstdlib>
#include <string>

#include "bags.hpp"
#include "ltlwb/errors.hpp"
#include "ltlwb/reductions.hpp"

namespace ltlwb {

namespace {

using detail::BagBuilder;
using detail::Chain;

enum class Style { fg, g_only, f_only, u_only };

struct Ops {
  Style style;

  Formula F(Formula a) const {
    switch (style) {
      case Style::fg:
      case Style::f_only: return Formula::finally(a);
      case Style::g_only: return Formula::neg(Formula::globally(Formula::neg(a)));
      case Style::u_only: return Formula::until(Formula::top(), a);
    }
    return a;
  }
  Formula G(Formula a) const {
    switch (style) {
      case Style::fg:
      case Style::g_only: return Formula::globally(a);
      case Style::f_only: return Formula::neg(Formula::finally(Formula::neg(a)));
      case Style::u_only:
        return Formula::neg(Formula::until(Formula::top(), Formula::neg(a)));
    }
    return a;
  }
};

Style style_for(FragmentSet t) {
  bool f = t.contains(Temporal::F), g = t.contains(Temporal::G), u = t.contains(Temporal::U);
  if (f && g) return Style::fg;
  if (u) return Style::u_only;
  if (g) return Style::g_only;
  if (f) return Style::f_only;
  throw NotExpressible("p-PW-SAT target needs F, G or U, got " + t.to_string());
}

Formula P(const std::string& s) { return Formula::prop(s); }
Formula d(int i) { return P("d_" + std::to_string(i)); }
Formula m(int i) { return P("m_" + std::to_string(i)); }
Formula q(int i) { return P("q_" + std::to_string(i)); }
Formula top(int j, int p) { return P("top^" + std::to_string(j) + "_" + std::to_string(p + 1)); }
Formula bot(int j, int p) { return P("bot^" + std::to_string(j) + "_" + std::to_string(p + 1)); }
Formula topup(int p) { return P("topup_" + std::to_string(p + 1)); }
Formula botup(int p) { return P("botup_" + std::to_string(p + 1)); }
Formula level(int i) { return Formula::conj(d(i), Formula::neg(d(i + 1))); }
Formula imp(Formula a, Formula b) { return Formula::implies(std::move(a), std::move(b)); }
Formula conj(Formula a, Formula b) { return Formula::conj(std::move(a), std::move(b)); }
Formula neg(Formula a) { return Formula::neg(std::move(a)); }

}  // namespace

int clause_schedule_separation(const Cnf& c) {
  std::vector<int> last(c.num_vars + 1, 0);
  int step = 0;
  for (const auto& cl : c.clauses) {
    for (int l : cl) step = std::max(step, std::abs(l));
    for (int l : cl) last[std::abs(l)] = std::max(last[std::abs(l)], step);
  }
  int best = 0;
  for (int i = 1; i <= c.num_vars; ++i) {
    int alive = 0;
    for (int v = 1; v <= i; ++v)
      if (last[v] > i) ++alive;
    best = std::max(best, alive);
  }
  return best;
}

int pwsat_witness_width(const PwSatInstance& i) {
  return 23 + 2 * i.k() + clause_schedule_separation(i.cnf);
}

ReductionOutput reduce_pwsat_to_sat(const PwSatInstance& inst, FragmentSet target,
                                    const ReductionOptions& opt) {
  inst.validate();
  Ops ops{style_for(target)};
  const int n = inst.num_vars();
  const int k = inst.k();
  const bool mutate = opt.mutation == Mutation::drop_conjunct;

  // psi[formula]; each clause is placed once its largest variable is reached.
  Chain formula;
  std::vector<int> clause_step;
  for (const auto& clause : inst.cnf.clauses) {
    std::vector<Formula> lits;
    int step = clause_step.empty() ? 0 : clause_step.back();
    for (int l : clause) {
      lits.push_back(l > 0 ? q(l) : neg(q(-l)));
      step = std::max(step, std::abs(l));
    }
    formula.add(disj_all(lits));
    clause_step.push_back(step);
  }

  // psi[depth]; the printed range stops at n-1.
  const int depth_last = opt.fidelity == Fidelity::as_printed ? n - 1 : n + 1;
  Chain depth;
  for (int i = 0; i <= depth_last; ++i)
    depth.add(imp(level(i),
                  conj(conj(m(i % 2), neg(m(1 - i % 2))), ops.F(level(i + 1)))));
  Formula depth_root = ops.G(depth.root());

  Chain fixed;
  for (int i = 1; i <= n; ++i)
    fixed.add(conj(imp(q(i), ops.G(q(i))), imp(neg(q(i)), ops.G(neg(q(i))))));

  Chain signal;
  for (int i = 1; i <= n; ++i) {
    int p = inst.partition_of(i);
    signal.add(imp(level(i), conj(imp(q(i), topup(p)), imp(neg(q(i)), botup(p)))));
  }
  Formula signal_root = ops.G(signal.root());

  Chain init_counters;
  for (int p = 0; p < k; ++p) init_counters.add(conj(top(0, p), bot(0, p)));
  Formula init_level = level(0);
  Formula init_g = ops.G(init_counters.root());
  Formula init_root = conj(init_level, init_g);

  Chain count;
  std::vector<std::pair<int, int>> count_key;
  for (int p = 0; p < k; ++p) {
    int size = static_cast<int>(inst.partitions[p].size());
    for (int j = 0; j <= size; ++j)
      for (int mm = 0; mm <= 1; ++mm) {
        Formula up = imp(conj(conj(topup(p), top(j, p)), m(mm)),
                         ops.G(imp(m(1 - mm), ops.G(top(j + 1, p)))));
        Formula down = imp(conj(conj(botup(p), bot(j, p)), m(mm)),
                           ops.G(imp(m(1 - mm), ops.G(bot(j + 1, p)))));
        count.add(conj(up, down));
        count_key.emplace_back(p, j);
      }
  }
  Formula count_root = ops.G(count.root());

  Chain mono_d;
  for (int i = 1; i <= n; ++i) mono_d.add(imp(d(i), d(i - 1)));
  Chain mono_c;
  std::vector<std::pair<int, int>> mono_key;
  for (int p = 0; p < k; ++p) {
    int size = static_cast<int>(inst.partitions[p].size());
    for (int j = 1; j <= size + 1; ++j) {
      mono_c.add(conj(imp(top(j, p), top(j - 1, p)), imp(bot(j, p), bot(j - 1, p))));
      mono_key.emplace_back(p, j);
    }
  }
  Formula mono_inner = conj(mono_d.root(), mono_c.root());
  Formula mono_root = ops.G(mono_inner);

  Chain targets;
  for (int p = 0; p < k; ++p) {
    int size = static_cast<int>(inst.partitions[p].size());
    int c = inst.capacities[p];
    targets.add(conj(neg(top(c + 1, p)), neg(bot(size - c + 1, p))));
  }
  Formula target_root = ops.G(targets.root());

  std::vector<Formula> blocks{formula.root(), depth_root,  fixed.root(), signal_root,
                              init_root,      count_root,  mono_root};
  if (!mutate) blocks.push_back(target_root);
  Formula psi = conj_all(blocks);

  ReductionOutput out;
  out.target = ReductionOutput::Target::sat;
  out.formula = psi;
  out.fragment = target;

  BagBuilder b(psi);
  // Top-level spine and the wrappers around every chain.
  Formula spine = psi;
  for (std::size_t t = blocks.size(); t > 1; --t) {
    b.star(spine);
    spine = spine.lhs();
  }
  b.wrapper(depth_root, {depth.root()});
  b.wrapper(signal_root, {signal.root()});
  b.wrapper(init_root, {init_counters.root()});
  b.wrapper(count_root, {count.root()});
  b.wrapper(mono_root, {mono_d.root(), mono_c.root()});
  if (!mutate) b.wrapper(target_root, {targets.root()});

  // Phase one walks the variables.
  std::size_t next_clause = 0;
  for (int i = 0; i <= std::max(n, depth_last); ++i) {
    if (i <= depth_last) depth.emit(b, i);
    if (i >= 1 && i <= n) {
      fixed.emit(b, i - 1);
      signal.emit(b, i - 1);
      mono_d.emit(b, i - 1);
    }
    while (next_clause < clause_step.size() && clause_step[next_clause] <= i)
      formula.emit(b, static_cast<int>(next_clause++));
  }
  while (next_clause < clause_step.size()) formula.emit(b, static_cast<int>(next_clause++));

  // Phase two walks the counters per partition.
  std::size_t ci = 0, mi = 0;
  for (int p = 0; p < k; ++p) {
    if (!mutate) targets.emit(b, p);
    init_counters.emit(b, p);
    int size = static_cast<int>(inst.partitions[p].size());
    for (int j = 0; j <= size + 1; ++j) {
      while (ci < count_key.size() && count_key[ci] == std::make_pair(p, j))
        count.emit(b, static_cast<int>(ci++));
      while (mi < mono_key.size() && mono_key[mi] == std::make_pair(p, j))
        mono_c.emit(b, static_cast<int>(mi++));
    }
  }

  out.witness = pad_path(b.filled(), pwsat_witness_width(inst));
  out.witness_of = ReductionOutput::WitnessOf::formula;
  out.cert.td = temporal_depth(psi);
  out.cert.nvar = nvar(psi);
  out.cert.width = width(*out.witness);
  return out;
}

}  // namespace ltlwb
