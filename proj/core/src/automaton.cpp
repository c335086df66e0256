#include "ltlwb/automaton.hpp"

#include <algorithm>

#include "ltlwb/propsat.hpp"

namespace ltlwb {

namespace {

std::uint64_t hash_set(const StateSet& s) {
  std::uint64_t h = 1469598103934665603ULL;
  for (int x : s) {
    h ^= static_cast<std::uint64_t>(x) + 0x9e3779b97f4a7c15ULL;
    h *= 1099511628211ULL;
  }
  return h;
}

}  // namespace

Gba::Gba(const Formula& f, bool negated) {
  root_ = pool_.translate(f, negated);
  until_index_.assign(pool_.size(), -1);
  for (int id = 0; id < pool_.size(); ++id) {
    if (pool_.node(id).kind == NKind::until) {
      until_index_[id] = static_cast<int>(untils_.size());
      untils_.push_back(id);
    }
  }
  StateSet init;
  if (root_ != pool_.tt()) init.push_back(root_);
  intern_state(std::move(init));
}

int Gba::intern_state(StateSet s) {
  std::uint64_t h = hash_set(s);
  auto& bucket = state_table_[h];
  for (int id : bucket)
    if (states_[id] == s) return id;
  int id = num_states();
  states_.push_back(std::move(s));
  bucket.push_back(id);
  return id;
}

int Gba::letter_class(const std::vector<char>& valuation) {
  std::string key(valuation.begin(), valuation.end());
  auto it = class_ids_.find(key);
  if (it != class_ids_.end()) return it->second;
  int id = static_cast<int>(classes_.size());
  classes_.push_back(valuation);
  class_ids_.emplace(std::move(key), id);
  return id;
}

const std::vector<GbaTransition>& Gba::expand(int state) {
  auto it = free_cache_.find(state);
  if (it != free_cache_.end()) return it->second;
  auto ts = compute(state, nullptr);
  return free_cache_.emplace(state, std::move(ts)).first->second;
}

const std::vector<GbaTransition>& Gba::expand(int state, int letter_class) {
  std::uint64_t key = (static_cast<std::uint64_t>(state) << 32) | static_cast<std::uint32_t>(letter_class);
  auto it = fixed_cache_.find(key);
  if (it != fixed_cache_.end()) return it->second;
  auto ts = compute(state, &classes_[letter_class]);
  for (auto& t : ts) t.letter = letter_class;
  return fixed_cache_.emplace(key, std::move(ts)).first->second;
}

void Gba::explore_all() {
  for (int s = 0; s < num_states(); ++s) expand(s);
}

std::vector<GbaTransition> Gba::compute(int state, const std::vector<char>* valuation) {
  // Local cone of the obligations, stopping below next operators.
  std::vector<int> cone;
  std::unordered_map<int, int> hvar;
  std::unordered_map<int, int> nvar;
  std::unordered_map<int, int> pvar;
  std::vector<int> puvar_until;  // until index per postponement variable
  std::unordered_map<int, int> puvar;
  SatSolver solver;

  std::vector<int> work(states_[state].begin(), states_[state].end());
  while (!work.empty()) {
    int g = work.back();
    work.pop_back();
    if (hvar.count(g)) continue;
    hvar.emplace(g, solver.new_var());
    cone.push_back(g);
    const NNode& n = pool_.node(g);
    switch (n.kind) {
      case NKind::conj:
      case NKind::disj:
      case NKind::until:
      case NKind::release:
        work.push_back(n.a);
        work.push_back(n.b);
        break;
      default:
        break;
    }
  }
  auto next_var = [&](int target) {
    auto it = nvar.find(target);
    if (it != nvar.end()) return it->second;
    int v = solver.new_var();
    nvar.emplace(target, v);
    return v;
  };
  std::vector<int> used_props;
  for (int g : cone) {
    const NNode& n = pool_.node(g);
    int h = hvar.at(g);
    switch (n.kind) {
      case NKind::tt:
        break;
      case NKind::ff:
        solver.add_clause({neg_lit(h)});
        break;
      case NKind::lit:
        if (valuation) {
          bool truth = (*valuation)[n.prop] != 0;
          if (truth == n.negative) solver.add_clause({neg_lit(h)});
        } else {
          auto it = pvar.find(n.prop);
          if (it == pvar.end()) {
            it = pvar.emplace(n.prop, solver.new_var()).first;
            used_props.push_back(n.prop);
          }
          solver.add_clause({neg_lit(h), n.negative ? neg_lit(it->second) : pos_lit(it->second)});
        }
        break;
      case NKind::conj:
        solver.add_clause({neg_lit(h), pos_lit(hvar.at(n.a))});
        solver.add_clause({neg_lit(h), pos_lit(hvar.at(n.b))});
        break;
      case NKind::disj:
        solver.add_clause({neg_lit(h), pos_lit(hvar.at(n.a)), pos_lit(hvar.at(n.b))});
        break;
      case NKind::next:
        solver.add_clause({neg_lit(h), pos_lit(next_var(n.a))});
        break;
      case NKind::until: {
        int hb = hvar.at(n.b);
        solver.add_clause({neg_lit(h), pos_lit(hb), pos_lit(hvar.at(n.a))});
        solver.add_clause({neg_lit(h), pos_lit(hb), pos_lit(next_var(g))});
        int pu = solver.new_var();
        puvar.emplace(pu, until_index_[g]);
        puvar_until.push_back(pu);
        solver.add_clause({neg_lit(h), pos_lit(hb), pos_lit(pu)});
        break;
      }
      case NKind::release:
        solver.add_clause({neg_lit(h), pos_lit(hvar.at(n.b))});
        solver.add_clause({neg_lit(h), pos_lit(hvar.at(n.a)), pos_lit(next_var(g))});
        break;
    }
  }
  for (int g : states_[state]) solver.add_clause({pos_lit(hvar.at(g))});
  std::sort(used_props.begin(), used_props.end());

  // Projection: next obligations and postponement markers.
  std::vector<int> proj;
  std::vector<int> proj_node;  // node id for next vars, -1 - until index for markers
  std::vector<std::pair<int, int>> nv(nvar.begin(), nvar.end());
  std::sort(nv.begin(), nv.end());
  for (auto [node, v] : nv) {
    proj.push_back(v);
    proj_node.push_back(node);
  }
  for (int pu : puvar_until) {
    proj.push_back(pu);
    proj_node.push_back(-1 - puvar.at(pu));
  }

  std::vector<GbaTransition> out;
  const std::size_t m = proj.size();
  std::vector<char> in_t(m);
  std::vector<Lit> assumptions;
  while (solver.solve()) {
    for (std::size_t i = 0; i < m; ++i) in_t[i] = solver.model_value(proj[i]);
    std::vector<char> props_true;
    auto snapshot = [&] {
      props_true.clear();
      for (int p : used_props) props_true.push_back(solver.model_value(pvar.at(p)));
    };
    snapshot();
    for (std::size_t i = 0; i < m; ++i) {
      if (!in_t[i]) continue;
      assumptions.clear();
      for (std::size_t j = 0; j < m; ++j)
        if (!in_t[j] || j == i) assumptions.push_back(neg_lit(proj[j]));
      if (solver.solve(assumptions)) {
        for (std::size_t j = 0; j < m; ++j) in_t[j] = in_t[j] && solver.model_value(proj[j]);
        snapshot();
      }
    }
    StateSet next;
    std::vector<int> postponed;
    std::vector<Lit> block;
    for (std::size_t i = 0; i < m; ++i) {
      if (!in_t[i]) continue;
      block.push_back(neg_lit(proj[i]));
      if (proj_node[i] >= 0) {
        if (proj_node[i] != pool_.tt()) next.push_back(proj_node[i]);
      } else {
        postponed.push_back(-1 - proj_node[i]);
      }
    }
    std::sort(next.begin(), next.end());
    std::sort(postponed.begin(), postponed.end());
    int letter = -1;
    if (!valuation) {
      std::vector<int> trues;
      for (std::size_t k = 0; k < used_props.size(); ++k)
        if (props_true[k]) trues.push_back(used_props[k]);
      auto [it, fresh] = letter_ids_.emplace(trues, static_cast<int>(letters_.size()));
      if (fresh) letters_.push_back(trues);
      letter = it->second;
    }
    out.push_back({intern_state(std::move(next)), letter, std::move(postponed)});
    if (block.empty()) break;
    solver.add_clause(block);
  }
  return out;
}

}  // namespace ltlwb
