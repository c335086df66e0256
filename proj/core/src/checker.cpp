#include "ltlwb/checker.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <map>
#include <set>
#include <unordered_map>

#include "ltlwb/errors.hpp"
#include "ltlwb/propsat.hpp"

namespace ltlwb {

namespace {

struct Edge {
  int to;
  int letter;
  const std::vector<int>* postponed;
};

struct Step {
  int node;
  int edge;
};

struct LassoPath {
  std::vector<Step> prefix;
  std::vector<Step> cycle;
};

// Sets known to have empty language; any superset is empty as well.
class EmptyIndex {
 public:
  void add(const StateSet& s) { sets_.push_back(s); }
  bool covers(const StateSet& s) const {
    for (const auto& e : sets_)
      if (e.size() <= s.size() && std::includes(s.begin(), s.end(), e.begin(), e.end()))
        return true;
    return false;
  }

 private:
  std::vector<StateSet> sets_;
};

// Tarjan's algorithm over a lazily generated graph; stops at the first SCC
// whose internal edges leave every until unpostponed at least once.
template <class Graph>
class Search {
 public:
  Search(Graph& g, int num_until, SearchStats* stats)
      : g_(g), num_until_(num_until), stats_(stats) {}

  std::optional<LassoPath> run() {
    int root = g_.initial();
    if (root < 0) return std::nullopt;
    grow();
    std::vector<std::pair<int, std::size_t>> frames;
    open(root);
    frames.push_back({root, 0});
    while (!frames.empty()) {
      auto& [v, next] = frames.back();
      if (next < adj_[v].size()) {
        int w = adj_[v][next++].to;
        grow();
        if (index_[w] < 0) {
          open(w);
          frames.push_back({w, 0});
        } else if (on_stack_[w]) {
          low_[v] = std::min(low_[v], index_[w]);
        }
        continue;
      }
      int done = v;
      frames.pop_back();
      if (!frames.empty()) {
        int parent = frames.back().first;
        low_[parent] = std::min(low_[parent], low_[done]);
      }
      if (low_[done] != index_[done]) continue;
      std::vector<int> scc;
      int x;
      do {
        x = stack_.back();
        stack_.pop_back();
        on_stack_[x] = 0;
        scc.push_back(x);
      } while (x != done);
      if (accepting(scc)) return witness();
      for (int y : scc) g_.mark_empty(y);
    }
    return std::nullopt;
  }

  const std::vector<Edge>& edges(int v) const { return adj_[v]; }

 private:
  void grow() {
    std::size_t n = static_cast<std::size_t>(g_.num_nodes());
    if (index_.size() >= n) return;
    index_.resize(n, -1);
    low_.resize(n, -1);
    on_stack_.resize(n, 0);
    adj_.resize(n);
    scc_id_.resize(n, -1);
  }

  void open(int v) {
    index_[v] = low_[v] = counter_++;
    stack_.push_back(v);
    on_stack_[v] = 1;
    g_.successors(v, adj_[v]);
    if (stats_) {
      ++stats_->nodes;
      stats_->edges += static_cast<long>(adj_[v].size());
    }
    grow();
  }

  bool accepting(const std::vector<int>& scc) {
    ++scc_counter_;
    for (int v : scc) scc_id_[v] = scc_counter_;
    bool internal = false;
    std::vector<char> covered(num_until_, 0);
    int missing = num_until_;
    for (int v : scc) {
      for (const Edge& e : adj_[v]) {
        if (scc_id_[e.to] != scc_counter_) continue;
        internal = true;
        if (missing == 0) continue;
        const auto& p = *e.postponed;
        std::size_t k = 0;
        for (int u = 0; u < num_until_; ++u) {
          if (k < p.size() && p[k] == u) {
            ++k;
            continue;
          }
          if (!covered[u]) {
            covered[u] = 1;
            --missing;
          }
        }
      }
    }
    return internal && missing == 0;
  }

  // Shortest path (as steps) from src to any node satisfying stop, within allowed nodes.
  template <class Allowed, class Stop>
  bool bfs(int src, Allowed allowed, Stop stop, std::vector<Step>& path) {
    std::unordered_map<int, Step> parent;
    std::deque<int> q{src};
    parent[src] = {-1, -1};
    while (!q.empty()) {
      int v = q.front();
      q.pop_front();
      const auto& out = adj_[v];
      for (std::size_t i = 0; i < out.size(); ++i) {
        int w = out[i].to;
        if (!allowed(w)) continue;
        if (stop(v, static_cast<int>(i))) {
          path.clear();
          path.push_back({v, static_cast<int>(i)});
          for (int cur = v; parent[cur].node >= 0; cur = parent[cur].node)
            path.push_back(parent[cur]);
          std::reverse(path.begin(), path.end());
          return true;
        }
        if (parent.count(w)) continue;
        parent[w] = {v, static_cast<int>(i)};
        q.push_back(w);
      }
    }
    return false;
  }

  LassoPath witness() {
    const int id = scc_counter_;
    auto in_scc = [&](int w) { return w < static_cast<int>(scc_id_.size()) && scc_id_[w] == id; };
    auto explored = [&](int w) { return index_[w] >= 0; };
    LassoPath out;
    int root = g_.initial();
    int entry = root;
    if (!in_scc(root)) {
      bfs(root, explored, [&](int v, int i) { return in_scc(adj_[v][i].to); }, out.prefix);
      entry = adj_[out.prefix.back().node][out.prefix.back().edge].to;
    }
    std::vector<char> covered(num_until_, 0);
    auto cover = [&](const Edge& e) {
      const auto& p = *e.postponed;
      for (int u = 0; u < num_until_; ++u)
        if (!std::binary_search(p.begin(), p.end(), u)) covered[u] = 1;
    };
    int cur = entry;
    std::vector<Step> seg;
    for (int u = 0; u < num_until_; ++u) {
      if (covered[u]) continue;
      bfs(cur, in_scc,
          [&](int v, int i) {
            const Edge& e = adj_[v][i];
            return in_scc(e.to) && !std::binary_search(e.postponed->begin(), e.postponed->end(), u);
          },
          seg);
      for (const Step& st : seg) {
        cover(adj_[st.node][st.edge]);
        out.cycle.push_back(st);
      }
      cur = adj_[seg.back().node][seg.back().edge].to;
    }
    if (cur != entry || out.cycle.empty()) {
      bfs(cur, in_scc, [&](int v, int i) { return adj_[v][i].to == entry; }, seg);
      for (const Step& st : seg) out.cycle.push_back(st);
    }
    return out;
  }

  Graph& g_;
  int num_until_;
  SearchStats* stats_;
  int counter_ = 0;
  int scc_counter_ = 0;
  std::vector<int> index_, low_, stack_, scc_id_;
  std::vector<char> on_stack_;
  std::vector<std::vector<Edge>> adj_;
};

// Satisfiability: nodes are automaton states.
class FreeGraph {
 public:
  explicit FreeGraph(Gba& a) : a_(a) {}
  int initial() { return 0; }
  int num_nodes() const { return a_.num_states(); }
  void successors(int v, std::vector<Edge>& out) {
    for (const auto& t : a_.expand(v)) {
      if (t.target >= static_cast<int>(dead_.size())) dead_.resize(t.target + 1, -1);
      if (dead_[t.target] < 0) dead_[t.target] = empties_.covers(a_.state(t.target)) ? 1 : 0;
      if (dead_[t.target] == 1) {
        if (stats) ++stats->pruned;
        continue;
      }
      out.push_back({t.target, t.letter, &t.postponed});
    }
  }
  void mark_empty(int v) {
    empties_.add(a_.state(v));
    if (v >= static_cast<int>(dead_.size())) dead_.resize(v + 1, -1);
    dead_[v] = 1;
  }

  SearchStats* stats = nullptr;

 private:
  Gba& a_;
  EmptyIndex empties_;
  std::vector<int> dead_;
};

// Necessary literals of a node at the current position; nullopt if unsatisfiable.
class Necessary {
 public:
  explicit Necessary(const NnfPool& p) : p_(p) {}

  const std::optional<std::vector<std::pair<int, bool>>>& of(int id) {
    auto it = memo_.find(id);
    if (it != memo_.end()) return it->second;
    std::optional<std::vector<std::pair<int, bool>>> r;
    const NNode& n = p_.node(id);
    switch (n.kind) {
      case NKind::tt:
      case NKind::next:
        r.emplace();
        break;
      case NKind::ff:
        break;
      case NKind::lit:
        r.emplace(1, std::make_pair(n.prop, n.negative));
        break;
      case NKind::conj: {
        auto a = of(n.a);
        auto b = of(n.b);
        if (a && b) {
          std::vector<std::pair<int, bool>> u;
          std::set_union(a->begin(), a->end(), b->begin(), b->end(), std::back_inserter(u));
          bool clash = false;
          for (std::size_t i = 0; i + 1 < u.size(); ++i)
            if (u[i].first == u[i + 1].first) clash = true;
          if (!clash) r = std::move(u);
        }
        break;
      }
      case NKind::disj:
      case NKind::until: {
        auto a = of(n.a);
        auto b = of(n.b);
        if (!a) r = b;
        else if (!b) r = a;
        else {
          r.emplace();
          std::set_intersection(a->begin(), a->end(), b->begin(), b->end(), std::back_inserter(*r));
        }
        break;
      }
      case NKind::release:
        r = of(n.b);
        break;
    }
    return memo_.emplace(id, std::move(r)).first->second;
  }

 private:
  const NnfPool& p_;
  std::unordered_map<int, std::optional<std::vector<std::pair<int, bool>>>> memo_;
};

// Existence of a path: nodes are (world, automaton state) pairs.
class ProductGraph {
 public:
  ProductGraph(Gba& a, const KripkeStructure& s, WorldId w0)
      : a_(a), s_(s), w0_(w0), nec_(a.pool()), empties_(s.num_worlds()) {
    const NnfPool& pool = a.pool();
    std::vector<int> prop_of(pool.num_props(), -1);
    for (int p = 0; p < pool.num_props(); ++p) {
      auto id = s.find_prop(pool.prop_name(p));
      if (id) prop_of[p] = *id;
    }
    valuation_.resize(s.num_worlds());
    letter_.resize(s.num_worlds());
    for (WorldId w = 0; w < s.num_worlds(); ++w) {
      std::vector<char> val(pool.num_props(), 0);
      for (int p = 0; p < pool.num_props(); ++p)
        val[p] = prop_of[p] >= 0 && s.has_label(w, prop_of[p]);
      letter_[w] = a_.letter_class(val);
      valuation_[w] = std::move(val);
    }
    words_ = (s.num_worlds() + 63) / 64;
  }

  int initial() {
    if (root_ == -2) root_ = node(w0_, a_.initial());
    return root_;
  }
  int num_nodes() const { return static_cast<int>(nodes_.size()); }
  void successors(int v, std::vector<Edge>& out) {
    auto [w, q] = nodes_[v];
    for (const auto& t : a_.expand(q, letter_[w])) {
      for (WorldId w2 : s_.successors(w)) {
        int n = node(w2, t.target);
        if (n < 0) {
          if (stats) ++stats->pruned;
          continue;
        }
        out.push_back({n, t.letter, &t.postponed});
      }
    }
  }
  void mark_empty(int v) {
    auto [w, q] = nodes_[v];
    empties_[w].add(a_.state(q));
  }
  WorldId world(int v) const { return nodes_[v].first; }

  SearchStats* stats = nullptr;

 private:
  int node(WorldId w, int q) {
    std::uint64_t key = (static_cast<std::uint64_t>(q) << 32) | static_cast<std::uint32_t>(w);
    auto it = ids_.find(key);
    if (it != ids_.end()) return it->second;
    int id = dead(w, a_.state(q)) ? -1 : static_cast<int>(nodes_.size());
    if (id >= 0) nodes_.push_back({w, q});
    ids_.emplace(key, id);
    return id;
  }

  bool possible_at(WorldId v, const std::vector<std::pair<int, bool>>& lits) const {
    for (auto [p, neg] : lits)
      if ((valuation_[v][p] != 0) == neg) return false;
    return true;
  }

  const std::vector<std::uint64_t>& reach(WorldId w) {
    if (reach_.empty()) reach_.resize(s_.num_worlds());
    auto& r = reach_[w];
    if (!r.empty()) return r;
    r.assign(words_, 0);
    std::vector<WorldId> work{w};
    r[w / 64] |= 1ULL << (w % 64);
    while (!work.empty()) {
      WorldId x = work.back();
      work.pop_back();
      for (WorldId y : s_.successors(x)) {
        if (r[y / 64] >> (y % 64) & 1) continue;
        r[y / 64] |= 1ULL << (y % 64);
        work.push_back(y);
      }
    }
    return r;
  }

  // An eventuality whose goal cannot hold at any reachable world.
  bool hopeless(WorldId w, int until_node) {
    std::uint64_t key = (static_cast<std::uint64_t>(until_node) << 32) | static_cast<std::uint32_t>(w);
    auto it = hopeless_.find(key);
    if (it != hopeless_.end()) return it->second;
    const auto& need = nec_.of(a_.pool().node(until_node).b);
    bool result = true;
    if (need) {
      const auto& r = reach(w);
      for (WorldId v = 0; v < s_.num_worlds() && result; ++v)
        if ((r[v / 64] >> (v % 64) & 1) && possible_at(v, *need)) result = false;
    }
    hopeless_.emplace(key, result);
    return result;
  }

  bool dead(WorldId w, const StateSet& s) {
    std::vector<int> work(s.begin(), s.end());
    while (!work.empty()) {
      int g = work.back();
      work.pop_back();
      const NNode& n = a_.pool().node(g);
      if (n.kind == NKind::conj) {
        work.push_back(n.a);
        work.push_back(n.b);
      } else if (n.kind == NKind::release) {
        work.push_back(n.b);
      } else if (n.kind == NKind::until) {
        if (hopeless(w, g)) return true;
      }
    }
    return empties_[w].covers(s);
  }

  Gba& a_;
  const KripkeStructure& s_;
  WorldId w0_;
  Necessary nec_;
  std::vector<EmptyIndex> empties_;
  std::vector<std::vector<char>> valuation_;
  std::vector<int> letter_;
  std::vector<std::pair<WorldId, int>> nodes_;
  std::unordered_map<std::uint64_t, int> ids_;
  std::unordered_map<std::uint64_t, bool> hopeless_;
  std::vector<std::vector<std::uint64_t>> reach_;
  int words_ = 1;
  int root_ = -2;
};

std::optional<Lasso> product_search(Gba& gba, const KripkeStructure& s, WorldId w,
                                    SearchStats* stats) {
  if (w < 0 || w >= s.num_worlds()) throw Error("world out of range");
  ProductGraph g(gba, s, w);
  g.stats = stats;
  Search<ProductGraph> search(g, gba.num_until(), stats);
  auto path = search.run();
  if (!path) return std::nullopt;
  Lasso l;
  for (const Step& st : path->prefix) l.prefix.push_back(g.world(st.node));
  for (const Step& st : path->cycle) l.cycle.push_back(g.world(st.node));
  return l;
}

}  // namespace

std::unique_ptr<Gba> ltl_to_gba(const Formula& f) { return std::make_unique<Gba>(f); }

std::optional<SatWitness> sat(const Formula& f, SearchStats* stats) {
  Gba gba(f);
  FreeGraph g(gba);
  g.stats = stats;
  Search<FreeGraph> search(g, gba.num_until(), stats);
  auto path = search.run();
  if (!path) return std::nullopt;
  std::vector<int> letters;
  for (const Step& st : path->prefix) letters.push_back(search.edges(st.node)[st.edge].letter);
  for (const Step& st : path->cycle) letters.push_back(search.edges(st.node)[st.edge].letter);
  SatWitness out;
  const int n = static_cast<int>(letters.size());
  for (int i = 0; i < n; ++i) {
    std::vector<std::string> labels;
    for (int p : gba.letter(letters[i])) labels.push_back(gba.pool().prop_name(p));
    out.structure.add_world("s" + std::to_string(i), labels);
  }
  const int loop = static_cast<int>(path->prefix.size());
  for (int i = 0; i + 1 < n; ++i) out.structure.add_edge(i, i + 1);
  out.structure.add_edge(n - 1, loop);
  out.structure.set_init(0);
  for (int i = 0; i < loop; ++i) out.lasso.prefix.push_back(i);
  for (int i = loop; i < n; ++i) out.lasso.cycle.push_back(i);
  return out;
}

std::optional<Lasso> exists_path(const KripkeStructure& s, WorldId w, const Formula& f,
                                 SearchStats* stats) {
  Gba gba(f);
  return product_search(gba, s, w, stats);
}

bool mc_universal(const KripkeStructure& s, WorldId w, const Formula& f) {
  Gba gba(f, true);
  return !product_search(gba, s, w, nullptr);
}

bool mc_universal(const McInstance& i) { return mc_universal(i.structure, i.world, i.formula); }

UniversalChecker::UniversalChecker(const Formula& f) : gba_(f, true) {}

bool UniversalChecker::holds(const KripkeStructure& s, WorldId w, SearchStats* stats) {
  return !product_search(gba_, s, w, stats);
}

std::optional<Lasso> UniversalChecker::counterexample(const KripkeStructure& s, WorldId w,
                                                      SearchStats* stats) {
  return product_search(gba_, s, w, stats);
}

namespace {

bool eval_finite(const Formula& f, const std::vector<WorldId>& path, int pos,
                 const KripkeStructure& s) {
  switch (f.op()) {
    case Op::prop: return s.has_label(path[pos], f.name());
    case Op::top: return true;
    case Op::bottom: return false;
    case Op::neg: return !eval_finite(f.child(), path, pos, s);
    case Op::conj: return eval_finite(f.lhs(), path, pos, s) && eval_finite(f.rhs(), path, pos, s);
    case Op::disj: return eval_finite(f.lhs(), path, pos, s) || eval_finite(f.rhs(), path, pos, s);
    case Op::implies:
      return !eval_finite(f.lhs(), path, pos, s) || eval_finite(f.rhs(), path, pos, s);
    case Op::next: return eval_finite(f.child(), path, pos + 1, s);
    default: throw FragmentMismatch("expected an X-only formula");
  }
}

}  // namespace

bool mc_x_bounded(const KripkeStructure& s, WorldId w, const Formula& f) {
  if (!fragment_of(f).subset_of(FragmentSet{Temporal::X}))
    throw FragmentMismatch("mc_x_bounded expects an X-only formula");
  if (w < 0 || w >= s.num_worlds()) throw Error("world out of range");
  const int td = temporal_depth(f);
  std::vector<WorldId> path{w};
  std::function<bool()> all = [&]() -> bool {
    if (static_cast<int>(path.size()) == td + 1) return eval_finite(f, path, 0, s);
    for (WorldId v : s.successors(path.back())) {
      path.push_back(v);
      bool ok = all();
      path.pop_back();
      if (!ok) return false;
    }
    return true;
  };
  return all();
}

bool mc_x_bounded(const McInstance& i) { return mc_x_bounded(i.structure, i.world, i.formula); }

namespace {

// Tseitin encoding of a flattened X-formula; X^n q becomes atom (n, q).
struct Tseitin {
  SatSolver& s;
  std::map<std::pair<int, std::string>, int> atoms;

  int encode(const Formula& f) {
    if (f.op() == Op::next || f.op() == Op::prop) {
      int depth = 0;
      Formula g = f;
      while (g.op() == Op::next) {
        g = g.child();
        ++depth;
      }
      auto key = std::make_pair(depth, g.name());
      auto it = atoms.find(key);
      if (it != atoms.end()) return it->second;
      int v = s.new_var();
      atoms.emplace(key, v);
      return v;
    }
    int v = s.new_var();
    switch (f.op()) {
      case Op::top: s.add_clause({pos_lit(v)}); break;
      case Op::bottom: s.add_clause({neg_lit(v)}); break;
      case Op::neg: {
        int a = encode(f.child());
        s.add_clause({neg_lit(v), neg_lit(a)});
        s.add_clause({pos_lit(v), pos_lit(a)});
        break;
      }
      case Op::conj: {
        int a = encode(f.lhs()), b = encode(f.rhs());
        s.add_clause({neg_lit(v), pos_lit(a)});
        s.add_clause({neg_lit(v), pos_lit(b)});
        s.add_clause({pos_lit(v), neg_lit(a), neg_lit(b)});
        break;
      }
      case Op::disj: {
        int a = encode(f.lhs()), b = encode(f.rhs());
        s.add_clause({neg_lit(v), pos_lit(a), pos_lit(b)});
        s.add_clause({pos_lit(v), neg_lit(a)});
        s.add_clause({pos_lit(v), neg_lit(b)});
        break;
      }
      case Op::implies: {
        int a = encode(f.lhs()), b = encode(f.rhs());
        s.add_clause({neg_lit(v), neg_lit(a), pos_lit(b)});
        s.add_clause({pos_lit(v), pos_lit(a)});
        s.add_clause({pos_lit(v), neg_lit(b)});
        break;
      }
      default:
        throw FragmentMismatch("expected an X-only formula");
    }
    return v;
  }
};

}  // namespace

bool sat_x(const Formula& f) {
  Formula flat = x_flatten(f);
  SatSolver s;
  Tseitin t{s, {}};
  int root = t.encode(flat);
  s.add_clause({pos_lit(root)});
  return s.solve();
}

namespace {

// Calls fn(path, loop) for every path from w of length <= bound and every
// back edge from its last world to path[loop].
template <typename Fn>
void for_each_lasso(const KripkeStructure& s, WorldId w, int bound, Fn&& fn) {
  if (bound < 1) return;
  std::vector<WorldId> path{w};
  std::function<void()> extend = [&]() {
    const auto& succ = s.successors(path.back());
    for (int j = 0; j < static_cast<int>(path.size()); ++j)
      if (std::find(succ.begin(), succ.end(), path[j]) != succ.end()) fn(path, j);
    if (static_cast<int>(path.size()) >= bound) return;
    for (WorldId v : succ) {
      path.push_back(v);
      extend();
      path.pop_back();
    }
  };
  extend();
}

}  // namespace

std::vector<Lasso> enumerate_lassos(const KripkeStructure& s, WorldId w, int bound) {
  std::vector<Lasso> out;
  for_each_lasso(s, w, bound, [&](const std::vector<WorldId>& path, int loop) {
    out.push_back({{path.begin(), path.begin() + loop}, {path.begin() + loop, path.end()}});
  });
  return out;
}

BruteChecker::BruteChecker(const KripkeStructure& s, WorldId w, int bound) : s_(s) {
  if (bound > 64) throw LimitExceeded("brute bound above 64");
  // Lassos are deduplicated as ultimately periodic label words: primitive
  // cycle, shortest prefix.
  std::map<std::vector<PropId>, int> letter_of;
  std::vector<int> letter(s.num_worlds());
  std::vector<std::vector<PropId>> labels_of;
  for (WorldId v = 0; v < s.num_worlds(); ++v) {
    auto [it, fresh] = letter_of.emplace(s.labels(v), static_cast<int>(labels_of.size()));
    if (fresh) labels_of.push_back(s.labels(v));
    letter[v] = it->second;
  }
  std::set<std::vector<int>> seen;
  for_each_lasso(s, w, bound, [&](const std::vector<WorldId>& path, int loop) {
    std::vector<int> pre, cyc;
    for (int i = 0; i < loop; ++i) pre.push_back(letter[path[i]]);
    for (int i = loop; i < static_cast<int>(path.size()); ++i) cyc.push_back(letter[path[i]]);
    const int c = static_cast<int>(cyc.size());
    for (int d = 1; d <= c; ++d) {
      if (c % d != 0) continue;
      bool periodic = true;
      for (int i = d; i < c && periodic; ++i) periodic = cyc[i] == cyc[i - d];
      if (periodic) {
        cyc.resize(d);
        break;
      }
    }
    while (!pre.empty() && pre.back() == cyc.back()) {
      std::rotate(cyc.rbegin(), cyc.rbegin() + 1, cyc.rend());
      pre.pop_back();
    }
    std::vector<int> key = pre;
    key.push_back(-1);
    key.insert(key.end(), cyc.begin(), cyc.end());
    if (!seen.insert(key).second) return;
    Word word{static_cast<int>(pre.size() + cyc.size()), static_cast<int>(pre.size()), {}};
    for (int x : pre) word.labels.push_back(labels_of[x]);
    for (int x : cyc) word.labels.push_back(labels_of[x]);
    words_.push_back(std::move(word));
  });
}

const std::vector<std::uint64_t>& BruteChecker::values(const Formula& f) {
  auto it = memo_.find(f.node_id());
  if (it == memo_.end()) {
    std::vector<std::uint64_t> vals(words_.size());
    static const std::vector<std::uint64_t> kNone;
    const std::vector<std::uint64_t>& a = f.arity() >= 1 ? values(f.lhs()) : kNone;
    const std::vector<std::uint64_t>& b = f.arity() == 2 ? values(f.rhs()) : kNone;
    auto pid = f.op() == Op::prop ? s_.find_prop(f.name()) : std::nullopt;
    for (std::size_t i = 0; i < words_.size(); ++i) {
      const Word& w = words_[i];
      const std::uint64_t full = w.length == 64 ? ~0ULL : (1ULL << w.length) - 1;
      auto next = [&](std::uint64_t m) {
        return (m >> 1) | (((m >> w.loop) & 1ULL) << (w.length - 1));
      };
      std::uint64_t r = 0;
      switch (f.op()) {
        case Op::prop:
          if (pid)
            for (int j = 0; j < w.length; ++j)
              if (std::find(w.labels[j].begin(), w.labels[j].end(), *pid) != w.labels[j].end())
                r |= 1ULL << j;
          break;
        case Op::top: r = full; break;
        case Op::bottom: r = 0; break;
        case Op::neg: r = ~a[i] & full; break;
        case Op::conj: r = a[i] & b[i]; break;
        case Op::disj: r = a[i] | b[i]; break;
        case Op::implies: r = (~a[i] | b[i]) & full; break;
        case Op::next: r = next(a[i]); break;
        case Op::finally:
        case Op::until: {
          std::uint64_t hold = f.op() == Op::until ? a[i] : full;
          std::uint64_t goal = f.op() == Op::until ? b[i] : a[i];
          r = goal;
          for (;;) {
            std::uint64_t nr = r | (hold & next(r));
            if (nr == r) break;
            r = nr;
          }
          break;
        }
        case Op::globally: {
          r = a[i];
          for (;;) {
            std::uint64_t nr = a[i] & next(r);
            if (nr == r) break;
            r = nr;
          }
          break;
        }
      }
      vals[i] = r;
    }
    it = memo_.emplace(f.node_id(), std::make_pair(f, std::move(vals))).first;
  }
  return it->second.second;
}

bool BruteChecker::holds(const Formula& f) {
  for (std::uint64_t v : values(f))
    if (!(v & 1ULL)) return false;
  return true;
}

bool brute_mc(const KripkeStructure& s, WorldId w, const Formula& f, int bound) {
  if (bound < 1) throw Error("bound must be at least 1");
  if (bound > 64) {
    for (const Lasso& l : enumerate_lassos(s, w, bound))
      if (!eval_on_lasso(s, l, f)) return false;
    return true;
  }
  BruteChecker b(s, w, bound);
  return b.holds(f);
}

bool brute_mc(const McInstance& i, int bound) { return brute_mc(i.structure, i.world, i.formula, bound); }

}  // namespace ltlwb
