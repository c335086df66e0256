#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "ltlwb/cnf.hpp"

namespace ltlwb {

// Variables are 1..cnf.num_vars; partitions are numbered 1..k in files and
// stored 0-based here.
struct PwSatInstance {
  Cnf cnf;
  std::vector<std::vector<int>> partitions;
  std::vector<int> capacities;

  int k() const { return static_cast<int>(partitions.size()); }
  int num_vars() const { return cnf.num_vars; }
  // 0-based partition index of variable v.
  int partition_of(int v) const;
  // Throws InvalidInstance on overlapping or missing variables or bad capacities.
  void validate() const;
};

PwSatInstance parse_pwsat(std::string_view text);
std::string write_pwsat(const PwSatInstance& i);

struct Tile {
  int up;
  int down;
  int left;
  int right;
  friend bool operator==(const Tile&, const Tile&) = default;
};

struct SquareTilingInstance {
  std::vector<std::string> colors;
  std::vector<Tile> tiles;
  int k = 1;

  void validate() const;
};

struct RectTilingInstance {
  std::vector<std::string> colors;
  std::vector<Tile> tiles;
  int c0 = 0;
  int c1 = 0;

  int width() const { return static_cast<int>(tiles.size()); }
  void validate() const;
};

SquareTilingInstance parse_square_tiling(std::string_view text);
RectTilingInstance parse_rect_tiling(std::string_view text);
std::string write_square_tiling(const SquareTilingInstance& t);
std::string write_rect_tiling(const RectTilingInstance& t);

}  // namespace ltlwb
