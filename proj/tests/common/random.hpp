#pragma once

#include <random>
#include <string>
#include <vector>

#include "ltlwb/formula.hpp"
#include "ltlwb/kripke.hpp"

namespace ltlwb::testing {

using Rng = std::mt19937_64;

inline int pick(Rng& rng, int n) { return static_cast<int>(rng() % static_cast<std::uint64_t>(n)); }

// Random formula with exactly `size` nodes over the given propositions. Only
// temporal operators in `ops` appear; Boolean connectives always may.
inline Formula random_formula(Rng& rng, int size, const std::vector<std::string>& props, FragmentSet ops,
                              bool constants = true) {
  if (size <= 1) {
    int choices = static_cast<int>(props.size()) + (constants ? 2 : 0);
    int c = pick(rng, choices);
    if (c < static_cast<int>(props.size())) return Formula::prop(props[c]);
    return c == static_cast<int>(props.size()) ? Formula::top() : Formula::bottom();
  }
  std::vector<Op> unary{Op::neg};
  std::vector<Op> binary{Op::conj, Op::disj, Op::implies};
  if (ops.contains(Temporal::X)) unary.push_back(Op::next);
  if (ops.contains(Temporal::F)) unary.push_back(Op::finally);
  if (ops.contains(Temporal::G)) unary.push_back(Op::globally);
  if (ops.contains(Temporal::U)) binary.push_back(Op::until);
  bool use_binary = size >= 3 && pick(rng, 2) == 0;
  if (!use_binary) {
    Op op = unary[pick(rng, static_cast<int>(unary.size()))];
    return Formula::make(op, random_formula(rng, size - 1, props, ops, constants), Formula());
  }
  Op op = binary[pick(rng, static_cast<int>(binary.size()))];
  int left = 1 + pick(rng, size - 2);
  return Formula::make(op, random_formula(rng, left, props, ops, constants),
                       random_formula(rng, size - 1 - left, props, ops, constants));
}

inline LassoWord random_word(Rng& rng, const std::vector<std::string>& props, int max_prefix, int max_cycle) {
  LassoWord w;
  auto letter = [&] {
    std::set<std::string> l;
    for (const auto& p : props)
      if (pick(rng, 2)) l.insert(p);
    return l;
  };
  int np = pick(rng, max_prefix + 1), nc = 1 + pick(rng, max_cycle);
  for (int i = 0; i < np; ++i) w.prefix.push_back(letter());
  for (int i = 0; i < nc; ++i) w.cycle.push_back(letter());
  return w;
}

// Random total structure; every world gets at least one successor.
inline KripkeStructure random_structure(Rng& rng, int worlds, const std::vector<std::string>& props) {
  KripkeStructure s;
  for (int w = 0; w < worlds; ++w) {
    std::vector<std::string> labels;
    for (const auto& p : props)
      if (pick(rng, 2)) labels.push_back(p);
    s.add_world("w" + std::to_string(w), labels);
  }
  for (int w = 0; w < worlds; ++w) {
    s.add_edge(w, pick(rng, worlds));
    for (int v = 0; v < worlds; ++v)
      if (pick(rng, 3) == 0) s.add_edge(w, v);
  }
  s.set_init(0);
  return s;
}

// Structure with exactly one path, the lasso word itself.
inline KripkeStructure word_structure(const LassoWord& w) {
  KripkeStructure s;
  int n = w.length();
  for (int i = 0; i < n; ++i) {
    const auto& l = w.at(i);
    s.add_world("s" + std::to_string(i), std::vector<std::string>(l.begin(), l.end()));
  }
  for (int i = 0; i + 1 < n; ++i) s.add_edge(i, i + 1);
  s.add_edge(n - 1, static_cast<int>(w.prefix.size()));
  s.set_init(0);
  return s;
}

// The word with position i repeated once.
inline LassoWord stutter(const LassoWord& w, int i) {
  LassoWord out = w;
  int np = static_cast<int>(w.prefix.size());
  if (i < np)
    out.prefix.insert(out.prefix.begin() + i, w.prefix[i]);
  else
    out.cycle.insert(out.cycle.begin() + (i - np), w.cycle[i - np]);
  return out;
}

// Suffix of the word starting at position 1.
inline LassoWord drop_first(const LassoWord& w) {
  LassoWord out;
  if (!w.prefix.empty()) {
    out.prefix.assign(w.prefix.begin() + 1, w.prefix.end());
    out.cycle = w.cycle;
  } else {
    out.cycle.assign(w.cycle.begin() + 1, w.cycle.end());
    out.cycle.push_back(w.cycle.front());
  }
  return out;
}

}  // namespace ltlwb::testing
