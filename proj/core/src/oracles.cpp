#include "ltlwb/oracles.hpp"

#include <cstdint>
#include <functional>
#include <limits>
#include <map>

#include "ltlwb/errors.hpp"

namespace ltlwb {

namespace {

Assignment from_mask(std::uint64_t mask, int n) {
  Assignment a(n);
  for (int v = 0; v < n; ++v) a[v] = (mask >> v) & 1;
  return a;
}

}  // namespace

std::optional<Assignment> solve_cnf(const Cnf& c, int limit) {
  if (c.num_vars > limit || c.num_vars > 62)
    throw LimitExceeded("cnf has " + std::to_string(c.num_vars) + " variables, limit is " +
                        std::to_string(limit));
  std::uint64_t total = std::uint64_t{1} << c.num_vars;
  for (std::uint64_t m = 0; m < total; ++m) {
    Assignment a = from_mask(m, c.num_vars);
    if (satisfies(c, a)) return a;
  }
  return std::nullopt;
}

bool is_saturated(const PwSatInstance& i, const Assignment& a) {
  for (int p = 0; p < i.k(); ++p) {
    int w = 0;
    for (int v : i.partitions[p]) w += a[v - 1] ? 1 : 0;
    if (w != i.capacities[p]) return false;
  }
  return true;
}

std::optional<Assignment> solve_pwsat(const PwSatInstance& i, int limit) {
  i.validate();
  if (i.num_vars() > limit)
    throw LimitExceeded("instance has " + std::to_string(i.num_vars()) + " variables, limit is " +
                        std::to_string(limit));
  std::uint64_t total = std::uint64_t{1} << i.num_vars();
  for (std::uint64_t m = 0; m < total; ++m) {
    Assignment a = from_mask(m, i.num_vars());
    if (is_saturated(i, a) && satisfies(i.cnf, a)) return a;
  }
  return std::nullopt;
}

bool is_valid_tiling(const std::vector<Tile>& tiles, const Tiling& t) {
  if (t.width < 1 || t.height < 1 || static_cast<int>(t.cells.size()) != t.width * t.height)
    return false;
  for (int c : t.cells)
    if (c < 0 || c >= static_cast<int>(tiles.size())) return false;
  for (int y = 0; y < t.height; ++y)
    for (int x = 0; x < t.width; ++x) {
      const Tile& here = tiles[t.at(x, y)];
      if (x + 1 < t.width && here.right != tiles[t.at(x + 1, y)].left) return false;
      if (y + 1 < t.height && here.down != tiles[t.at(x, y + 1)].up) return false;
    }
  return true;
}

std::optional<Tiling> solve_square_tiling(const SquareTilingInstance& inst, int max_k) {
  inst.validate();
  if (inst.k > max_k)
    throw LimitExceeded("k=" + std::to_string(inst.k) + " exceeds limit " + std::to_string(max_k));
  int k = inst.k;
  int nd = static_cast<int>(inst.tiles.size());
  Tiling t{k, k, std::vector<int>(k * k, -1)};
  std::function<bool(int)> place = [&](int cell) {
    if (cell == k * k) return true;
    int x = cell % k, y = cell / k;
    for (int d = 0; d < nd; ++d) {
      const Tile& tile = inst.tiles[d];
      if (x > 0 && inst.tiles[t.cells[cell - 1]].right != tile.left) continue;
      if (y > 0 && inst.tiles[t.cells[cell - k]].down != tile.up) continue;
      t.cells[cell] = d;
      if (place(cell + 1)) return true;
    }
    t.cells[cell] = -1;
    return false;
  };
  if (place(0)) return t;
  return std::nullopt;
}

bool is_valid_square_tiling(const SquareTilingInstance& inst, const Tiling& t) {
  return t.width == inst.k && t.height == inst.k && is_valid_tiling(inst.tiles, t);
}

long default_rect_bound(const RectTilingInstance& t) {
  long n = t.width();
  long rows = 1;
  for (long i = 0; i < n; ++i) {
    if (rows > std::numeric_limits<long>::max() / n) return std::numeric_limits<long>::max();
    rows *= n;
  }
  return rows + 1;
}

std::optional<Tiling> solve_rect_tiling(const RectTilingInstance& inst, long bound) {
  inst.validate();
  if (bound < 0) bound = default_rect_bound(inst);
  int n = inst.width();
  int nd = n;
  // Rows are valid horizontally; enumerate them in lexicographic order.
  std::vector<std::vector<int>> rows;
  std::vector<int> cur;
  std::function<void()> build = [&]() {
    if (static_cast<int>(cur.size()) == n) {
      rows.push_back(cur);
      return;
    }
    for (int d = 0; d < nd; ++d) {
      if (!cur.empty() && inst.tiles[cur.back()].right != inst.tiles[d].left) continue;
      cur.push_back(d);
      build();
      cur.pop_back();
    }
  };
  build();
  if (rows.size() > 2000000) throw LimitExceeded("too many row types");
  auto all_side = [&](const std::vector<int>& row, int color, bool up) {
    for (int d : row)
      if ((up ? inst.tiles[d].up : inst.tiles[d].down) != color) return false;
    return true;
  };
  auto fits = [&](const std::vector<int>& above, const std::vector<int>& below) {
    for (int x = 0; x < n; ++x)
      if (inst.tiles[above[x]].down != inst.tiles[below[x]].up) return false;
    return true;
  };
  int nr = static_cast<int>(rows.size());
  std::vector<int> parent(nr, -2);
  std::vector<int> layer;
  for (int r = 0; r < nr; ++r)
    if (all_side(rows[r], inst.c0, true)) {
      parent[r] = -1;
      layer.push_back(r);
    }
  for (long m = 1; m <= bound && !layer.empty(); ++m) {
    for (int r : layer) {
      if (!all_side(rows[r], inst.c1, false)) continue;
      std::vector<int> chain;
      for (int x = r; x >= 0; x = parent[x]) chain.push_back(x);
      Tiling t{n, static_cast<int>(chain.size()), {}};
      for (auto it = chain.rbegin(); it != chain.rend(); ++it)
        t.cells.insert(t.cells.end(), rows[*it].begin(), rows[*it].end());
      return t;
    }
    std::vector<int> next;
    for (int r : layer)
      for (int s = 0; s < nr; ++s)
        if (parent[s] == -2 && fits(rows[r], rows[s])) {
          parent[s] = r;
          next.push_back(s);
        }
    layer = std::move(next);
  }
  return std::nullopt;
}

bool is_valid_rect_tiling(const RectTilingInstance& inst, const Tiling& t) {
  if (t.width != inst.width() || !is_valid_tiling(inst.tiles, t)) return false;
  for (int x = 0; x < t.width; ++x) {
    if (inst.tiles[t.at(x, 0)].up != inst.c0) return false;
    if (inst.tiles[t.at(x, t.height - 1)].down != inst.c1) return false;
  }
  return true;
}

std::string write_assignment(const Assignment& a) {
  std::string out;
  for (std::size_t v = 0; v < a.size(); ++v)
    out += "assign " + std::to_string(v + 1) + " " + (a[v] ? "1" : "0") + "\n";
  return out;
}

std::string write_tiling(const Tiling& t) {
  std::string out;
  for (int y = 0; y < t.height; ++y)
    for (int x = 0; x < t.width; ++x)
      out += "cell " + std::to_string(x + 1) + " " + std::to_string(y + 1) + " " +
             std::to_string(t.at(x, y) + 1) + "\n";
  return out;
}

}  // namespace ltlwb
