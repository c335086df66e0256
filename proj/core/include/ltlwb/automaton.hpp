#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <unordered_map>
#include <vector>

#include "ltlwb/formula.hpp"

namespace ltlwb {

enum class NKind : std::uint8_t { tt, ff, lit, conj, disj, next, until, release };

struct NNode {
  NKind kind;
  int a = -1;
  int b = -1;
  int prop = -1;
  bool negative = false;
};

// Hash-consed negation normal form with a release dual.
class NnfPool {
 public:
  NnfPool();

  int tt() const { return 0; }
  int ff() const { return 1; }
  int lit(int prop, bool negative);
  int conj(int a, int b);
  int disj(int a, int b);
  int next(int a);
  int until(int a, int b);
  int release(int a, int b);
  int translate(const Formula& f, bool negated);

  const NNode& node(int id) const { return nodes_[id]; }
  int size() const { return static_cast<int>(nodes_.size()); }
  int prop_id(const std::string& name);
  int num_props() const { return static_cast<int>(props_.size()); }
  const std::string& prop_name(int p) const { return props_[p]; }

 private:
  int make(NNode n);

  std::vector<NNode> nodes_;
  std::unordered_map<std::uint64_t, std::vector<int>> table_;
  std::vector<std::string> props_;
  std::unordered_map<std::string, int> prop_ids_;
  std::unordered_map<const void*, int> memo_pos_;
  std::unordered_map<const void*, int> memo_neg_;
  std::vector<Formula> keep_;
};

using StateSet = std::vector<int>;

struct GbaTransition {
  int target;
  int letter;
  // Until-indices postponed on this transition; all others are accepting.
  std::vector<int> postponed;
};

// Generalized Büchi automaton whose states are obligation sets (sorted NNF ids).
// Successors are the subset-minimal (next-obligations, postponed-untils) pairs of
// a local expansion, computed on demand. One acceptance set per until node.
class Gba {
 public:
  // Automaton for f, or for its negation when negated is set.
  explicit Gba(const Formula& f, bool negated = false);

  const NnfPool& pool() const { return pool_; }
  int initial() const { return 0; }
  int num_states() const { return static_cast<int>(states_.size()); }
  const StateSet& state(int id) const { return states_[id]; }
  int num_until() const { return static_cast<int>(untils_.size()); }
  int until_node(int index) const { return untils_[index]; }

  // Free valuation: the transition letter records the chosen propositions.
  const std::vector<GbaTransition>& expand(int state);
  // Valuation fixed by a letter class from letter_class().
  const std::vector<GbaTransition>& expand(int state, int letter_class);

  // Interns a full valuation over pool propositions (1 = true).
  int letter_class(const std::vector<char>& valuation);
  // Propositions set to true in a free-expansion letter.
  const std::vector<int>& letter(int id) const { return letters_[id]; }

  // Explores every state reachable under free expansion.
  void explore_all();

 private:
  int intern_state(StateSet s);
  std::vector<GbaTransition> compute(int state, const std::vector<char>* valuation);

  NnfPool pool_;
  int root_;
  std::vector<int> untils_;
  std::vector<int> until_index_;
  std::vector<StateSet> states_;
  std::unordered_map<std::uint64_t, std::vector<int>> state_table_;
  std::vector<std::vector<int>> letters_;
  std::map<std::vector<int>, int> letter_ids_;
  std::vector<std::vector<char>> classes_;
  std::unordered_map<std::string, int> class_ids_;
  std::unordered_map<int, std::vector<GbaTransition>> free_cache_;
  std::unordered_map<std::uint64_t, std::vector<GbaTransition>> fixed_cache_;
};

}  // namespace ltlwb
