#include <algorithm>

#include "ltlwb/automaton.hpp"

namespace ltlwb {

namespace {

std::uint64_t key_of(const NNode& n) {
  std::uint64_t k = static_cast<std::uint64_t>(n.kind);
  k = k * 1000003u + static_cast<std::uint64_t>(n.a + 1);
  k = k * 1000003u + static_cast<std::uint64_t>(n.b + 1);
  k = k * 1000003u + static_cast<std::uint64_t>(n.prop + 1);
  return k * 2 + (n.negative ? 1 : 0);
}

bool same(const NNode& x, const NNode& y) {
  return x.kind == y.kind && x.a == y.a && x.b == y.b && x.prop == y.prop &&
         x.negative == y.negative;
}

}  // namespace

NnfPool::NnfPool() {
  make({NKind::tt});
  make({NKind::ff});
}

int NnfPool::make(NNode n) {
  auto& bucket = table_[key_of(n)];
  for (int id : bucket)
    if (same(nodes_[id], n)) return id;
  int id = size();
  nodes_.push_back(n);
  bucket.push_back(id);
  return id;
}

int NnfPool::prop_id(const std::string& name) {
  auto it = prop_ids_.find(name);
  if (it != prop_ids_.end()) return it->second;
  int id = num_props();
  props_.push_back(name);
  prop_ids_.emplace(name, id);
  return id;
}

int NnfPool::lit(int prop, bool negative) { return make({NKind::lit, -1, -1, prop, negative}); }

namespace {

bool complementary(const NNode& x, const NNode& y) {
  return x.kind == NKind::lit && y.kind == NKind::lit && x.prop == y.prop &&
         x.negative != y.negative;
}

}  // namespace

int NnfPool::conj(int a, int b) {
  if (a == ff() || b == ff()) return ff();
  if (a == tt()) return b;
  if (b == tt() || a == b) return a;
  if (complementary(nodes_[a], nodes_[b])) return ff();
  if (a > b) std::swap(a, b);
  return make({NKind::conj, a, b});
}

int NnfPool::disj(int a, int b) {
  if (a == tt() || b == tt()) return tt();
  if (a == ff()) return b;
  if (b == ff() || a == b) return a;
  if (complementary(nodes_[a], nodes_[b])) return tt();
  if (a > b) std::swap(a, b);
  return make({NKind::disj, a, b});
}

int NnfPool::next(int a) {
  if (a == tt() || a == ff()) return a;
  return make({NKind::next, a});
}

int NnfPool::until(int a, int b) {
  if (b == tt() || b == ff() || a == ff()) return b;
  return make({NKind::until, a, b});
}

int NnfPool::release(int a, int b) {
  if (b == tt() || b == ff() || a == tt()) return b;
  return make({NKind::release, a, b});
}

int NnfPool::translate(const Formula& f, bool negated) {
  auto& memo = negated ? memo_neg_ : memo_pos_;
  auto it = memo.find(f.node_id());
  if (it != memo.end()) return it->second;
  int r = 0;
  switch (f.op()) {
    case Op::prop: r = lit(prop_id(f.name()), negated); break;
    case Op::top: r = negated ? ff() : tt(); break;
    case Op::bottom: r = negated ? tt() : ff(); break;
    case Op::neg: r = translate(f.child(), !negated); break;
    case Op::conj:
      r = negated ? disj(translate(f.lhs(), true), translate(f.rhs(), true))
                  : conj(translate(f.lhs(), false), translate(f.rhs(), false));
      break;
    case Op::disj:
      r = negated ? conj(translate(f.lhs(), true), translate(f.rhs(), true))
                  : disj(translate(f.lhs(), false), translate(f.rhs(), false));
      break;
    case Op::implies:
      r = negated ? conj(translate(f.lhs(), false), translate(f.rhs(), true))
                  : disj(translate(f.lhs(), true), translate(f.rhs(), false));
      break;
    case Op::next: r = next(translate(f.child(), negated)); break;
    case Op::finally:
      r = negated ? release(ff(), translate(f.child(), true)) : until(tt(), translate(f.child(), false));
      break;
    case Op::globally:
      r = negated ? until(tt(), translate(f.child(), true)) : release(ff(), translate(f.child(), false));
      break;
    case Op::until:
      r = negated ? release(translate(f.lhs(), true), translate(f.rhs(), true))
                  : until(translate(f.lhs(), false), translate(f.rhs(), false));
      break;
  }
  keep_.push_back(f);
  memo.emplace(f.node_id(), r);
  return r;
}

}  // namespace ltlwb
