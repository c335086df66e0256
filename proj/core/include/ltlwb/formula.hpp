#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace ltlwb {

enum class Op : std::uint8_t {
  prop,
  top,
  bottom,
  neg,
  conj,
  disj,
  implies,
  next,
  finally,
  globally,
  until,
};

bool is_unary(Op op);
bool is_binary(Op op);
bool is_temporal(Op op);
std::string_view op_name(Op op);

// Immutable LTL syntax tree. Copies share nodes.
class Formula {
 public:
  Formula();

  static Formula prop(std::string name);
  static Formula top();
  static Formula bottom();
  static Formula neg(Formula a);
  static Formula conj(Formula a, Formula b);
  static Formula disj(Formula a, Formula b);
  static Formula implies(Formula a, Formula b);
  static Formula next(Formula a);
  static Formula finally(Formula a);
  static Formula globally(Formula a);
  static Formula until(Formula a, Formula b);
  static Formula make(Op op, Formula a, Formula b);

  Op op() const;
  const std::string& name() const;
  const Formula& lhs() const;
  const Formula& rhs() const;
  const Formula& child() const { return lhs(); }
  int arity() const;

  std::size_t size() const;
  std::size_t hash() const;
  const void* node_id() const { return node_.get(); }

  friend bool operator==(const Formula& a, const Formula& b);
  friend bool operator!=(const Formula& a, const Formula& b) { return !(a == b); }

 private:
  struct Node;
  explicit Formula(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  std::shared_ptr<const Node> node_;
};

struct FormulaHash {
  std::size_t operator()(const Formula& f) const { return f.hash(); }
};

// Left-nested conjunction/disjunction; empty lists give true/false.
Formula conj_all(const std::vector<Formula>& parts);
Formula disj_all(const std::vector<Formula>& parts);
Formula next_n(Formula f, int n);

enum class Temporal : std::uint8_t { X = 1, F = 2, G = 4, U = 8 };

class FragmentSet {
 public:
  constexpr FragmentSet() = default;
  constexpr FragmentSet(std::initializer_list<Temporal> ops) {
    for (auto o : ops) bits_ |= static_cast<std::uint8_t>(o);
  }
  static FragmentSet from_bits(std::uint8_t b) {
    FragmentSet s;
    s.bits_ = b & 15;
    return s;
  }
  // Accepts e.g. "FG", "F,G", "{U}", "" (empty).
  static FragmentSet parse(std::string_view text);

  bool contains(Temporal t) const { return bits_ & static_cast<std::uint8_t>(t); }
  void insert(Temporal t) { bits_ |= static_cast<std::uint8_t>(t); }
  bool empty() const { return bits_ == 0; }
  bool subset_of(FragmentSet o) const { return (bits_ & ~o.bits_) == 0; }
  std::uint8_t bits() const { return bits_; }
  // "X,F" style; "-" for the empty set.
  std::string to_string() const;

  friend bool operator==(FragmentSet a, FragmentSet b) { return a.bits_ == b.bits_; }

 private:
  std::uint8_t bits_ = 0;
};

Formula parse_formula(std::string_view text);
std::string to_string(const Formula& f);

int temporal_depth(const Formula& f);
FragmentSet fragment_of(const Formula& f);
std::set<std::string> propositions(const Formula& f);
int nvar(const Formula& f);
int leaf_count(const Formula& f);

Formula rewrite_fragment(const Formula& f, FragmentSet target);
Formula x_flatten(const Formula& f);

}  // namespace ltlwb
