#include "ltlwb/formula.hpp"

#include <algorithm>
#include <functional>
#include <unordered_map>

#include "ltlwb/errors.hpp"

namespace ltlwb {

struct Formula::Node {
  Op op;
  std::string name;
  Formula a;
  Formula b;
  std::size_t hash;
  std::size_t size;
};

namespace {

std::size_t mix(std::size_t h, std::size_t v) {
  return h ^ (v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2));
}

const Formula& empty_formula() {
  static const Formula f;
  return f;
}

}  // namespace

bool is_unary(Op op) {
  return op == Op::neg || op == Op::next || op == Op::finally || op == Op::globally;
}

bool is_binary(Op op) {
  return op == Op::conj || op == Op::disj || op == Op::implies || op == Op::until;
}

bool is_temporal(Op op) {
  return op == Op::next || op == Op::finally || op == Op::globally || op == Op::until;
}

std::string_view op_name(Op op) {
  switch (op) {
    case Op::prop: return "prop";
    case Op::top: return "true";
    case Op::bottom: return "false";
    case Op::neg: return "not";
    case Op::conj: return "and";
    case Op::disj: return "or";
    case Op::implies: return "implies";
    case Op::next: return "X";
    case Op::finally: return "F";
    case Op::globally: return "G";
    case Op::until: return "U";
  }
  return "?";
}

Formula::Formula() : Formula(top()) {}

Formula Formula::make(Op op, Formula a, Formula b) {
  auto n = std::make_shared<Node>(Node{op, {}, Formula(nullptr), Formula(nullptr), 0, 0});
  std::size_t h = mix(0x51ed27, static_cast<std::size_t>(op));
  std::size_t sz = 1;
  if (is_unary(op) || is_binary(op)) {
    h = mix(h, a.hash());
    sz += a.size();
    n->a = std::move(a);
  }
  if (is_binary(op)) {
    h = mix(h, b.hash());
    sz += b.size();
    n->b = std::move(b);
  }
  n->hash = h;
  n->size = sz;
  return Formula(std::move(n));
}

Formula Formula::prop(std::string name) {
  if (name.empty()) throw Error("proposition name must be nonempty");
  std::size_t h = mix(std::hash<std::string>{}(name), 7);
  auto n = std::make_shared<Node>(
      Node{Op::prop, std::move(name), Formula(nullptr), Formula(nullptr), h, 1});
  return Formula(std::move(n));
}

Formula Formula::top() {
  auto n = std::make_shared<Node>(Node{Op::top, {}, Formula(nullptr), Formula(nullptr),
                                       mix(0x51ed27, static_cast<std::size_t>(Op::top)), 1});
  return Formula(std::move(n));
}

Formula Formula::bottom() {
  auto n = std::make_shared<Node>(Node{Op::bottom, {}, Formula(nullptr), Formula(nullptr),
                                       mix(0x51ed27, static_cast<std::size_t>(Op::bottom)), 1});
  return Formula(std::move(n));
}

Formula Formula::neg(Formula a) { return make(Op::neg, std::move(a), {}); }
Formula Formula::conj(Formula a, Formula b) { return make(Op::conj, std::move(a), std::move(b)); }
Formula Formula::disj(Formula a, Formula b) { return make(Op::disj, std::move(a), std::move(b)); }
Formula Formula::implies(Formula a, Formula b) {
  return make(Op::implies, std::move(a), std::move(b));
}
Formula Formula::next(Formula a) { return make(Op::next, std::move(a), {}); }
Formula Formula::finally(Formula a) { return make(Op::finally, std::move(a), {}); }
Formula Formula::globally(Formula a) { return make(Op::globally, std::move(a), {}); }
Formula Formula::until(Formula a, Formula b) { return make(Op::until, std::move(a), std::move(b)); }

Op Formula::op() const { return node_->op; }
const std::string& Formula::name() const { return node_->name; }
const Formula& Formula::lhs() const { return node_->a.node_ ? node_->a : empty_formula(); }
const Formula& Formula::rhs() const { return node_->b.node_ ? node_->b : empty_formula(); }
int Formula::arity() const { return is_binary(op()) ? 2 : is_unary(op()) ? 1 : 0; }
std::size_t Formula::size() const { return node_->size; }
std::size_t Formula::hash() const { return node_->hash; }

bool operator==(const Formula& x, const Formula& y) {
  const Formula::Node* a = x.node_.get();
  const Formula::Node* b = y.node_.get();
  if (a == b) return true;
  if (!a || !b) return false;
  if (a->hash != b->hash || a->op != b->op || a->size != b->size) return false;
  if (a->op == Op::prop) return a->name == b->name;
  if (is_unary(a->op)) return a->a == b->a;
  if (is_binary(a->op)) return a->a == b->a && a->b == b->b;
  return true;
}

Formula conj_all(const std::vector<Formula>& parts) {
  if (parts.empty()) return Formula::top();
  Formula acc = parts[0];
  for (std::size_t i = 1; i < parts.size(); ++i) acc = Formula::conj(acc, parts[i]);
  return acc;
}

Formula disj_all(const std::vector<Formula>& parts) {
  if (parts.empty()) return Formula::bottom();
  Formula acc = parts[0];
  for (std::size_t i = 1; i < parts.size(); ++i) acc = Formula::disj(acc, parts[i]);
  return acc;
}

Formula next_n(Formula f, int n) {
  for (int i = 0; i < n; ++i) f = Formula::next(f);
  return f;
}

FragmentSet FragmentSet::parse(std::string_view text) {
  FragmentSet s;
  for (char c : text) {
    switch (c) {
      case 'X': s.insert(Temporal::X); break;
      case 'F': s.insert(Temporal::F); break;
      case 'G': s.insert(Temporal::G); break;
      case 'U': s.insert(Temporal::U); break;
      case ',': case ' ': case '{': case '}': case '-': break;
      default: throw Error(std::string("unknown temporal operator '") + c + "'");
    }
  }
  return s;
}

std::string FragmentSet::to_string() const {
  std::string out;
  const std::pair<Temporal, char> order[] = {
      {Temporal::X, 'X'}, {Temporal::F, 'F'}, {Temporal::G, 'G'}, {Temporal::U, 'U'}};
  for (auto [t, c] : order) {
    if (!contains(t)) continue;
    if (!out.empty()) out += ',';
    out += c;
  }
  return out.empty() ? "-" : out;
}

int temporal_depth(const Formula& f) {
  switch (f.op()) {
    case Op::prop:
    case Op::top:
    case Op::bottom:
      return 0;
    case Op::neg:
      return temporal_depth(f.child());
    case Op::conj:
    case Op::disj:
    case Op::implies:
      return std::max(temporal_depth(f.lhs()), temporal_depth(f.rhs()));
    case Op::next:
    case Op::finally:
    case Op::globally:
      return temporal_depth(f.child()) + 1;
    case Op::until:
      return std::max(temporal_depth(f.lhs()), temporal_depth(f.rhs())) + 1;
  }
  return 0;
}

namespace {

void collect_fragment(const Formula& f, FragmentSet& s) {
  switch (f.op()) {
    case Op::next: s.insert(Temporal::X); break;
    case Op::finally: s.insert(Temporal::F); break;
    case Op::globally: s.insert(Temporal::G); break;
    case Op::until: s.insert(Temporal::U); break;
    default: break;
  }
  if (f.arity() >= 1) collect_fragment(f.lhs(), s);
  if (f.arity() == 2) collect_fragment(f.rhs(), s);
}

void collect_props(const Formula& f, std::set<std::string>& out) {
  if (f.op() == Op::prop) {
    out.insert(f.name());
    return;
  }
  if (f.arity() >= 1) collect_props(f.lhs(), out);
  if (f.arity() == 2) collect_props(f.rhs(), out);
}

}  // namespace

FragmentSet fragment_of(const Formula& f) {
  FragmentSet s;
  collect_fragment(f, s);
  return s;
}

std::set<std::string> propositions(const Formula& f) {
  std::set<std::string> out;
  collect_props(f, out);
  return out;
}

int nvar(const Formula& f) { return static_cast<int>(propositions(f).size()); }

int leaf_count(const Formula& f) {
  if (f.arity() == 0) return 1;
  if (f.arity() == 1) return leaf_count(f.child());
  return leaf_count(f.lhs()) + leaf_count(f.rhs());
}

namespace {

struct Rewriter {
  FragmentSet target;
  std::unordered_map<const void*, Formula> memo;

  Formula run(const Formula& f) {
    if (f.arity() == 0) return f;
    auto it = memo.find(f.node_id());
    if (it != memo.end()) return it->second;
    Formula a = run(f.lhs());
    Formula b = f.arity() == 2 ? run(f.rhs()) : Formula();
    Formula out;
    switch (f.op()) {
      case Op::next:
        if (!target.contains(Temporal::X))
          throw NotExpressible("X cannot be expressed in fragment " + target.to_string());
        out = Formula::next(a);
        break;
      case Op::finally:
        if (target.contains(Temporal::F)) out = Formula::finally(a);
        else if (target.contains(Temporal::G))
          out = Formula::neg(Formula::globally(Formula::neg(a)));
        else if (target.contains(Temporal::U)) out = Formula::until(Formula::top(), a);
        else throw NotExpressible("F cannot be expressed in fragment " + target.to_string());
        break;
      case Op::globally:
        if (target.contains(Temporal::G)) out = Formula::globally(a);
        else if (target.contains(Temporal::F))
          out = Formula::neg(Formula::finally(Formula::neg(a)));
        else if (target.contains(Temporal::U))
          out = Formula::neg(Formula::until(Formula::top(), Formula::neg(a)));
        else throw NotExpressible("G cannot be expressed in fragment " + target.to_string());
        break;
      case Op::until:
        if (!target.contains(Temporal::U))
          throw NotExpressible("U cannot be expressed in fragment " + target.to_string());
        out = Formula::until(a, b);
        break;
      default:
        out = Formula::make(f.op(), a, b);
        break;
    }
    memo.emplace(f.node_id(), out);
    return out;
  }
};

Formula flatten(const Formula& f, int depth) {
  switch (f.op()) {
    case Op::prop:
      return next_n(f, depth);
    case Op::top:
    case Op::bottom:
      return f;
    case Op::neg:
      return Formula::neg(flatten(f.child(), depth));
    case Op::conj:
    case Op::disj:
    case Op::implies:
      return Formula::make(f.op(), flatten(f.lhs(), depth), flatten(f.rhs(), depth));
    case Op::next:
      return flatten(f.child(), depth + 1);
    default:
      throw FragmentMismatch("x_flatten expects an X-only formula");
  }
}

}  // namespace

Formula rewrite_fragment(const Formula& f, FragmentSet target) {
  Rewriter r{target, {}};
  return r.run(f);
}

Formula x_flatten(const Formula& f) {
  if (!fragment_of(f).subset_of(FragmentSet{Temporal::X}))
    throw FragmentMismatch("x_flatten expects an X-only formula");
  return flatten(f, 0);
}

}  // namespace ltlwb
