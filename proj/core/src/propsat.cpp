#include "ltlwb/propsat.hpp"

#include <algorithm>

namespace ltlwb {

int SatSolver::new_var() {
  int v = num_vars();
  assign_.push_back(kUndef);
  phase_.push_back(kFalse);
  level_.push_back(0);
  reason_.push_back(-1);
  activity_.push_back(0.0);
  seen_.push_back(0);
  heap_pos_.push_back(-1);
  watches_.emplace_back();
  watches_.emplace_back();
  heap_insert(v);
  return v;
}

void SatSolver::enqueue(Lit l, int reason) {
  int v = lit_var(l);
  assign_[v] = lit_negative(l) ? kFalse : kTrue;
  level_[v] = level();
  reason_[v] = reason;
  trail_.push_back(l);
}

int SatSolver::attach(std::vector<Lit> lits) {
  int id = static_cast<int>(clauses_.size());
  watches_[lits[0]].push_back(id);
  watches_[lits[1]].push_back(id);
  clauses_.push_back(std::move(lits));
  return id;
}

void SatSolver::add_clause(std::vector<Lit> lits) {
  if (!ok_) return;
  cancel_until(0);
  std::sort(lits.begin(), lits.end());
  lits.erase(std::unique(lits.begin(), lits.end()), lits.end());
  std::vector<Lit> kept;
  for (std::size_t i = 0; i < lits.size(); ++i) {
    if (i + 1 < lits.size() && lits[i + 1] == negate(lits[i])) return;
    std::int8_t val = lit_value(lits[i]);
    if (val == kTrue) return;
    if (val == kUndef) kept.push_back(lits[i]);
  }
  if (kept.empty()) {
    ok_ = false;
    return;
  }
  if (kept.size() == 1) {
    enqueue(kept[0], -1);
    if (propagate() >= 0) ok_ = false;
    return;
  }
  attach(std::move(kept));
}

int SatSolver::propagate() {
  while (qhead_ < trail_.size()) {
    Lit p = trail_[qhead_++];
    Lit false_lit = negate(p);
    auto& ws = watches_[false_lit];
    std::size_t i = 0, j = 0;
    while (i < ws.size()) {
      int cid = ws[i++];
      auto& c = clauses_[cid];
      if (c[0] == false_lit) std::swap(c[0], c[1]);
      if (lit_value(c[0]) == kTrue) {
        ws[j++] = cid;
        continue;
      }
      bool moved = false;
      for (std::size_t k = 2; k < c.size(); ++k) {
        if (lit_value(c[k]) != kFalse) {
          std::swap(c[1], c[k]);
          watches_[c[1]].push_back(cid);
          moved = true;
          break;
        }
      }
      if (moved) continue;
      ws[j++] = cid;
      if (lit_value(c[0]) == kFalse) {
        while (i < ws.size()) ws[j++] = ws[i++];
        ws.resize(j);
        qhead_ = trail_.size();
        return cid;
      }
      enqueue(c[0], cid);
    }
    ws.resize(j);
  }
  return -1;
}

void SatSolver::bump(int v) {
  activity_[v] += var_inc_;
  if (activity_[v] > 1e100) {
    for (auto& a : activity_) a *= 1e-100;
    var_inc_ *= 1e-100;
  }
  if (heap_pos_[v] >= 0) heap_up(heap_pos_[v]);
}

void SatSolver::analyze(int confl, std::vector<Lit>& learnt, int& bt_level) {
  learnt.clear();
  learnt.push_back(-1);
  int path = 0;
  Lit p = -1;
  int idx = static_cast<int>(trail_.size()) - 1;
  do {
    const auto& c = clauses_[confl];
    for (std::size_t k = (p == -1 ? 0 : 1); k < c.size(); ++k) {
      Lit q = c[k];
      int v = lit_var(q);
      if (seen_[v] || level_[v] == 0) continue;
      seen_[v] = 1;
      bump(v);
      if (level_[v] >= level()) ++path;
      else learnt.push_back(q);
    }
    while (!seen_[lit_var(trail_[idx])]) --idx;
    p = trail_[idx--];
    confl = reason_[lit_var(p)];
    seen_[lit_var(p)] = 0;
    --path;
  } while (path > 0);
  learnt[0] = negate(p);
  for (std::size_t k = 1; k < learnt.size(); ++k) seen_[lit_var(learnt[k])] = 0;
  bt_level = 0;
  if (learnt.size() > 1) {
    std::size_t best = 1;
    for (std::size_t k = 2; k < learnt.size(); ++k)
      if (level_[lit_var(learnt[k])] > level_[lit_var(learnt[best])]) best = k;
    std::swap(learnt[1], learnt[best]);
    bt_level = level_[lit_var(learnt[1])];
  }
  var_inc_ /= 0.95;
}

void SatSolver::cancel_until(int lvl) {
  if (level() <= lvl) return;
  for (int k = static_cast<int>(trail_.size()) - 1; k >= trail_lim_[lvl]; --k) {
    int v = lit_var(trail_[k]);
    phase_[v] = assign_[v];
    assign_[v] = kUndef;
    reason_[v] = -1;
    if (heap_pos_[v] < 0) heap_insert(v);
  }
  trail_.resize(trail_lim_[lvl]);
  trail_lim_.resize(lvl);
  qhead_ = trail_.size();
}

void SatSolver::heap_insert(int v) {
  heap_pos_[v] = static_cast<int>(heap_.size());
  heap_.push_back(v);
  heap_up(heap_pos_[v]);
}

void SatSolver::heap_up(int i) {
  int v = heap_[i];
  while (i > 0) {
    int parent = (i - 1) / 2;
    if (activity_[heap_[parent]] >= activity_[v]) break;
    heap_[i] = heap_[parent];
    heap_pos_[heap_[i]] = i;
    i = parent;
  }
  heap_[i] = v;
  heap_pos_[v] = i;
}

void SatSolver::heap_down(int i) {
  int v = heap_[i];
  int n = static_cast<int>(heap_.size());
  for (;;) {
    int c = 2 * i + 1;
    if (c >= n) break;
    if (c + 1 < n && activity_[heap_[c + 1]] > activity_[heap_[c]]) ++c;
    if (activity_[heap_[c]] <= activity_[v]) break;
    heap_[i] = heap_[c];
    heap_pos_[heap_[i]] = i;
    i = c;
  }
  heap_[i] = v;
  heap_pos_[v] = i;
}

int SatSolver::heap_pop() {
  int v = heap_[0];
  heap_pos_[v] = -1;
  int last = heap_.back();
  heap_.pop_back();
  if (!heap_.empty()) {
    heap_[0] = last;
    heap_pos_[last] = 0;
    heap_down(0);
  }
  return v;
}

int SatSolver::pick_branch() {
  while (!heap_.empty()) {
    int v = heap_pop();
    if (assign_[v] == kUndef) return v;
  }
  return -1;
}

// 1 = sat, 0 = unsat, -1 = budget exhausted.
int SatSolver::search(int conflict_budget, const std::vector<Lit>& assumptions) {
  std::vector<Lit> learnt;
  int conflicts = 0;
  for (;;) {
    int confl = propagate();
    if (confl >= 0) {
      ++conflicts;
      if (level() == 0) return 0;
      int bt;
      analyze(confl, learnt, bt);
      cancel_until(bt);
      if (learnt.size() == 1) {
        enqueue(learnt[0], -1);
      } else {
        int id = attach(learnt);
        enqueue(clauses_[id][0], id);
      }
      continue;
    }
    if (conflicts >= conflict_budget) {
      cancel_until(0);
      return -1;
    }
    Lit next = -1;
    while (level() < static_cast<int>(assumptions.size())) {
      Lit a = assumptions[level()];
      std::int8_t val = lit_value(a);
      if (val == kTrue) {
        trail_lim_.push_back(static_cast<int>(trail_.size()));
      } else if (val == kFalse) {
        return 0;
      } else {
        next = a;
        break;
      }
    }
    if (next < 0) {
      int v = pick_branch();
      if (v < 0) return 1;
      next = phase_[v] == kTrue ? pos_lit(v) : neg_lit(v);
    }
    trail_lim_.push_back(static_cast<int>(trail_.size()));
    enqueue(next, -1);
  }
}

namespace {

double luby(double y, int x) {
  int size = 1, seq = 0;
  while (size < x + 1) {
    ++seq;
    size = 2 * size + 1;
  }
  while (size - 1 != x) {
    size = (size - 1) >> 1;
    --seq;
    x = x % size;
  }
  double r = 1;
  for (int i = 0; i < seq; ++i) r *= y;
  return r;
}

}  // namespace

bool SatSolver::solve(const std::vector<Lit>& assumptions) {
  if (!ok_) return false;
  cancel_until(0);
  if (propagate() >= 0) {
    ok_ = false;
    return false;
  }
  for (int round = 0;; ++round) {
    int budget = static_cast<int>(luby(2, round) * 100);
    int r = search(budget, assumptions);
    if (r == 1) {
      model_ = assign_;
      cancel_until(0);
      return true;
    }
    if (r == 0) {
      if (level() == 0 && assumptions.empty()) ok_ = false;
      cancel_until(0);
      return false;
    }
  }
}

}  // namespace ltlwb
