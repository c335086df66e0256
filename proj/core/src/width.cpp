#include <algorithm>
#include <cstdint>
#include <limits>
#include <set>
#include <vector>

#include "ltlwb/errors.hpp"
#include "ltlwb/graph.hpp"

namespace ltlwb {

namespace {

using Mask = std::uint32_t;

std::vector<Mask> neighbor_masks(const Graph& g) {
  std::vector<Mask> nb(g.num_vertices(), 0);
  for (int v = 0; v < g.num_vertices(); ++v)
    for (int u : g.neighbors(v)) nb[v] |= Mask{1} << u;
  return nb;
}

void check_limit(const Graph& g, int limit) {
  if (limit > 24) limit = 24;
  if (g.num_vertices() > limit)
    throw LimitExceeded("graph has " + std::to_string(g.num_vertices()) +
                        " vertices, exact limit is " + std::to_string(limit));
}

WidthResult empty_result(Decomposition::Shape shape) {
  Decomposition d;
  d.shape = shape;
  d.bags.emplace_back();
  return {0, d};
}

// Path decomposition whose i-th bag holds order[i] and every earlier vertex
// that still has a neighbor at or after position i.
Decomposition path_from_order(const Graph& g, const std::vector<int>& order) {
  int n = g.num_vertices();
  std::vector<int> pos(n);
  for (int i = 0; i < n; ++i) pos[order[i]] = i;
  std::vector<int> last(n);
  for (int v = 0; v < n; ++v) {
    last[v] = pos[v];
    for (int u : g.neighbors(v)) last[v] = std::max(last[v], pos[u]);
  }
  std::vector<std::vector<int>> bags(n);
  for (int v = 0; v < n; ++v)
    for (int i = pos[v]; i <= last[v]; ++i) bags[i].push_back(v);
  for (auto& b : bags) std::sort(b.begin(), b.end());
  return Decomposition::path(std::move(bags));
}

// Tree decomposition from an elimination ordering via the elimination game.
WidthResult tree_from_elimination(const Graph& g, const std::vector<int>& order) {
  int n = g.num_vertices();
  std::vector<int> pos(n);
  for (int i = 0; i < n; ++i) pos[order[i]] = i;
  std::vector<std::set<int>> adj(n);
  for (int v = 0; v < n; ++v)
    for (int u : g.neighbors(v)) adj[v].insert(u);
  Decomposition d;
  d.shape = Decomposition::Shape::tree;
  d.bags.resize(n);
  std::vector<int> parent(n, -1);
  int w = 0;
  for (int i = 0; i < n; ++i) {
    int v = order[i];
    std::vector<int> later;
    for (int u : adj[v])
      if (pos[u] > i) later.push_back(u);
    for (std::size_t a = 0; a < later.size(); ++a)
      for (std::size_t b = a + 1; b < later.size(); ++b) {
        adj[later[a]].insert(later[b]);
        adj[later[b]].insert(later[a]);
      }
    d.bags[i] = later;
    d.bags[i].push_back(v);
    std::sort(d.bags[i].begin(), d.bags[i].end());
    w = std::max(w, static_cast<int>(later.size()));
    int p = -1;
    for (int u : later)
      if (p < 0 || pos[u] < p) p = pos[u];
    parent[i] = p;
  }
  for (int i = 0; i + 1 < n; ++i)
    d.links.emplace_back(i, parent[i] >= 0 ? parent[i] : i + 1);
  return {w, d};
}

}  // namespace

WidthResult exact_pathwidth(const Graph& g, int limit) {
  check_limit(g, limit);
  int n = g.num_vertices();
  if (n == 0) return empty_result(Decomposition::Shape::path);
  auto nb = neighbor_masks(g);
  Mask full = (Mask{1} << n) - 1;
  std::vector<std::uint8_t> boundary(full + 1), best(full + 1);
  for (Mask s = 1; s <= full; ++s) {
    int c = 0;
    for (Mask t = s; t; t &= t - 1) {
      int u = __builtin_ctz(t);
      if (nb[u] & ~s) ++c;
    }
    boundary[s] = static_cast<std::uint8_t>(c);
  }
  best[0] = 0;
  for (Mask s = 1; s <= full; ++s) {
    int b = std::numeric_limits<int>::max();
    for (Mask t = s; t; t &= t - 1) {
      Mask prev = s & ~(Mask{1} << __builtin_ctz(t));
      b = std::min(b, std::max<int>(best[prev], boundary[prev]));
    }
    best[s] = static_cast<std::uint8_t>(b);
  }
  std::vector<int> order;
  Mask s = full;
  while (s) {
    for (Mask t = s; t; t &= t - 1) {
      int v = __builtin_ctz(t);
      Mask prev = s & ~(Mask{1} << v);
      if (std::max<int>(best[prev], boundary[prev]) == best[s]) {
        order.push_back(v);
        s = prev;
        break;
      }
    }
  }
  std::reverse(order.begin(), order.end());
  return {best[full], path_from_order(g, order)};
}

WidthResult exact_treewidth(const Graph& g, int limit) {
  check_limit(g, limit);
  int n = g.num_vertices();
  if (n == 0) return empty_result(Decomposition::Shape::tree);
  auto nb = neighbor_masks(g);
  Mask full = (Mask{1} << n) - 1;
  // q(s, v): vertices outside s and v reachable from v through s.
  auto q = [&](Mask s, int v) {
    Mask seen = Mask{1} << v, frontier = seen, out = 0;
    while (frontier) {
      int x = __builtin_ctz(frontier);
      frontier &= frontier - 1;
      Mask nx = nb[x] & ~seen;
      seen |= nx;
      out |= nx & ~s;
      frontier |= nx & s;
    }
    return __builtin_popcount(out);
  };
  std::vector<std::uint8_t> best(full + 1);
  best[0] = 0;
  for (Mask s = 1; s <= full; ++s) {
    int b = std::numeric_limits<int>::max();
    for (Mask t = s; t; t &= t - 1) {
      int v = __builtin_ctz(t);
      Mask prev = s & ~(Mask{1} << v);
      if (best[prev] >= b) continue;
      b = std::min(b, std::max<int>(best[prev], q(prev, v)));
    }
    best[s] = static_cast<std::uint8_t>(b);
  }
  std::vector<int> order;
  Mask s = full;
  while (s) {
    for (Mask t = s; t; t &= t - 1) {
      int v = __builtin_ctz(t);
      Mask prev = s & ~(Mask{1} << v);
      if (std::max<int>(best[prev], q(prev, v)) == best[s]) {
        order.push_back(v);
        s = prev;
        break;
      }
    }
  }
  std::reverse(order.begin(), order.end());
  WidthResult r = tree_from_elimination(g, order);
  r.width = best[full];
  return r;
}

WidthResult minfill_upper(const Graph& g) {
  int n = g.num_vertices();
  if (n == 0) return empty_result(Decomposition::Shape::tree);
  const int words = (n + 63) / 64;
  std::vector<std::vector<std::uint64_t>> adj(n, std::vector<std::uint64_t>(words, 0));
  std::vector<int> deg(n, 0);
  auto has = [&](int a, int b) { return adj[a][b / 64] >> (b % 64) & 1; };
  auto link = [&](int a, int b) {
    if (has(a, b)) return;
    adj[a][b / 64] |= 1ULL << (b % 64);
    adj[b][a / 64] |= 1ULL << (a % 64);
    ++deg[a];
    ++deg[b];
  };
  auto neighbors = [&](int v) {
    std::vector<int> out;
    for (int w = 0; w < words; ++w)
      for (std::uint64_t m = adj[v][w]; m; m &= m - 1) out.push_back(w * 64 + __builtin_ctzll(m));
    return out;
  };
  for (int v = 0; v < n; ++v)
    for (int u : g.neighbors(v))
      if (u != v) link(v, u);
  std::vector<char> gone(n, 0);
  std::vector<int> order;
  for (int step = 0; step < n; ++step) {
    int pick = -1;
    long pick_fill = 0;
    for (int v = 0; v < n; ++v) {
      if (gone[v]) continue;
      // Twice the number of adjacent neighbor pairs.
      long linked = 0;
      for (int a : neighbors(v))
        for (int w = 0; w < words; ++w) linked += __builtin_popcountll(adj[a][w] & adj[v][w]);
      long fill = (static_cast<long>(deg[v]) * (deg[v] - 1) - linked) / 2;
      if (pick < 0 || fill < pick_fill || (fill == pick_fill && deg[v] < deg[pick])) {
        pick = v;
        pick_fill = fill;
      }
      if (pick_fill == 0 && deg[pick] <= 1) break;
    }
    gone[pick] = 1;
    order.push_back(pick);
    std::vector<int> nbrs = neighbors(pick);
    for (int a : nbrs) {
      adj[a][pick / 64] &= ~(1ULL << (pick % 64));
      --deg[a];
    }
    for (std::size_t a = 0; a < nbrs.size(); ++a)
      for (std::size_t b = a + 1; b < nbrs.size(); ++b) link(nbrs[a], nbrs[b]);
    std::fill(adj[pick].begin(), adj[pick].end(), 0);
    deg[pick] = 0;
  }
  return tree_from_elimination(g, order);
}

WidthResult greedy_path_upper(const Graph& g) {
  int n = g.num_vertices();
  if (n == 0) return empty_result(Decomposition::Shape::path);
  std::vector<int> open(n);
  for (int v = 0; v < n; ++v) open[v] = static_cast<int>(g.neighbors(v).size());
  std::vector<char> placed(n, 0);
  std::set<int> frontier;
  std::vector<int> order;
  int next_fresh = 0;
  for (int step = 0; step < n; ++step) {
    // Gain: boundary change from placing v.
    auto delta = [&](int v) {
      int d = open[v] > 0 ? 1 : 0;
      for (int u : g.neighbors(v))
        if (placed[u] && open[u] == 1) --d;
      return d;
    };
    int pick = -1, pick_d = 0, pick_new = 0;
    auto consider = [&](int v) {
      int d = delta(v);
      if (pick < 0 || d < pick_d || (d == pick_d && open[v] < pick_new) ||
          (d == pick_d && open[v] == pick_new && v < pick)) {
        pick = v;
        pick_d = d;
        pick_new = open[v];
      }
    };
    for (int v : frontier) consider(v);
    if (pick < 0) {
      while (placed[next_fresh]) ++next_fresh;
      pick = next_fresh;
    }
    placed[pick] = 1;
    frontier.erase(pick);
    order.push_back(pick);
    for (int u : g.neighbors(pick)) {
      --open[u];
      if (!placed[u]) frontier.insert(u);
    }
  }
  Decomposition d = path_from_order(g, order);
  return {width(d), d};
}

}  // namespace ltlwb
