#pragma once

#include <cstdint>
#include <vector>

namespace ltlwb {

// Literal for variable v: 2v (positive) or 2v+1 (negative).
using Lit = int;
inline Lit pos_lit(int v) { return 2 * v; }
inline Lit neg_lit(int v) { return 2 * v + 1; }
inline Lit negate(Lit l) { return l ^ 1; }
inline int lit_var(Lit l) { return l >> 1; }
inline bool lit_negative(Lit l) { return l & 1; }

// Conflict-driven clause learning with watched literals and assumptions.
// Decisions prefer the saved phase, initially false.
class SatSolver {
 public:
  int new_var();
  int num_vars() const { return static_cast<int>(assign_.size()); }
  void add_clause(std::vector<Lit> lits);
  bool solve(const std::vector<Lit>& assumptions = {});
  // Model of the last successful solve.
  bool model_value(int v) const { return model_[v] == 1; }
  bool okay() const { return ok_; }

 private:
  enum : std::int8_t { kFalse = 0, kTrue = 1, kUndef = -1 };

  std::int8_t lit_value(Lit l) const {
    std::int8_t a = assign_[lit_var(l)];
    if (a == kUndef) return kUndef;
    return static_cast<std::int8_t>(a ^ (l & 1));
  }
  int level() const { return static_cast<int>(trail_lim_.size()); }
  void enqueue(Lit l, int reason);
  int propagate();
  void analyze(int confl, std::vector<Lit>& learnt, int& bt_level);
  void cancel_until(int lvl);
  int pick_branch();
  void bump(int v);
  void heap_insert(int v);
  void heap_up(int i);
  void heap_down(int i);
  int heap_pop();
  int attach(std::vector<Lit> lits);
  int search(int conflict_budget, const std::vector<Lit>& assumptions);

  bool ok_ = true;
  std::vector<std::vector<Lit>> clauses_;
  std::vector<std::vector<int>> watches_;
  std::vector<std::int8_t> assign_;
  std::vector<std::int8_t> phase_;
  std::vector<int> level_;
  std::vector<int> reason_;
  std::vector<Lit> trail_;
  std::vector<int> trail_lim_;
  std::size_t qhead_ = 0;
  std::vector<double> activity_;
  double var_inc_ = 1.0;
  std::vector<int> heap_;
  std::vector<int> heap_pos_;
  std::vector<char> seen_;
  std::vector<std::int8_t> model_;
};

}  // namespace ltlwb
