#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ltlwb/cnf.hpp"
#include "ltlwb/instances.hpp"

namespace ltlwb {

// Assignments are indexed by variable: a[v-1] is the value of variable v.
using Assignment = std::vector<bool>;

std::optional<Assignment> solve_cnf(const Cnf& c, int limit = 24);
std::optional<Assignment> solve_pwsat(const PwSatInstance& i, int limit = 20);
bool is_saturated(const PwSatInstance& i, const Assignment& a);

// Row-major tile indices: cells[y * width + x], y = 0 is the top row.
struct Tiling {
  int width = 0;
  int height = 0;
  std::vector<int> cells;

  int at(int x, int y) const { return cells[y * width + x]; }
};

bool is_valid_tiling(const std::vector<Tile>& tiles, const Tiling& t);

std::optional<Tiling> solve_square_tiling(const SquareTilingInstance& t, int max_k = 5);
bool is_valid_square_tiling(const SquareTilingInstance& inst, const Tiling& t);

// Default bound is |D|^n + 1 with n = |D|.
long default_rect_bound(const RectTilingInstance& t);
std::optional<Tiling> solve_rect_tiling(const RectTilingInstance& t, long bound = -1);
bool is_valid_rect_tiling(const RectTilingInstance& inst, const Tiling& t);

std::string write_assignment(const Assignment& a);
// One `cell <x> <y> <tile-index>` line per cell, 1-based coordinates and indices.
std::string write_tiling(const Tiling& t);

}  // namespace ltlwb
