#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "ltlwb/cnf.hpp"
#include "ltlwb/instances.hpp"
#include "ltlwb/reductions.hpp"

namespace ltlwb::cli {

enum class Family {
  pwsat,
  pwsat_u,
  sat3_f,
  sat3_x,
  sqtile_x,
  sqtile_f,
  sqtile_g,
  sqtile_u,
  recttile_xf,
  recttile_u,
};

// "pwsat", "pwsat-u", "3sat-f", ...; throws Error on unknown names.
Family parse_family(const std::string& name);
std::string family_name(Family f);
std::vector<Family> all_families();

struct VerifyOptions {
  Family family = Family::sat3_f;
  bool exhaustive = false;
  int vars = 3;
  int clauses = 2;
  int partitions = 2;
  int colors = 2;
  int tiles = 2;
  int k = 2;
  int count = 50;
  std::uint64_t seed = 1;
  ReductionOptions reduction;
};

struct VerifyRow {
  int index = 0;
  std::string instance;
  bool source = false;
  bool target = false;
  bool agree = false;
  bool witness_ok = false;
  Certificate cert;
  double oracle_ms = 0;
  double reduce_ms = 0;
  double check_ms = 0;
};

struct VerifyReport {
  Family family = Family::sat3_f;
  std::vector<VerifyRow> rows;

  int disagreements() const;
  int invalid_witnesses() const;
  bool passed() const { return disagreements() == 0 && invalid_witnesses() == 0; }
  // Deterministic payload: one `row` line per instance and a `summary` line.
  std::string text() const;
  // Timing lines, kept apart from the comparable payload.
  std::string timings() const;
};

VerifyReport run_verify(const VerifyOptions& opt);

// Exhaustive instance families.
// 3CNFs over 1..max_vars variables with 1..max_clauses clauses; a clause is a
// multiset of three literals and a CNF a multiset of clauses.
std::vector<Cnf3> all_3cnfs(int max_vars, int max_clauses);
// Non-tautological clause sets with 1..max_clauses distinct clauses over
// 1..max_vars variables, crossed with every partition into exactly k
// nonempty blocks for k in 1..max_k and every capacity vector.
std::vector<PwSatInstance> all_pwsat(int max_vars, int max_clauses, int max_k);
// Sets of 1..max_tiles distinct tiles over the given number of colors.
std::vector<SquareTilingInstance> all_square_tilings(int colors, int max_tiles, int k);
// Same tile sets, crossed with every boundary color pair.
std::vector<RectTilingInstance> all_rect_tilings(int colors, int max_tiles);

// Seeded random families.
std::vector<Cnf3> random_3cnfs(int vars, int clauses, int count, std::uint64_t seed);
std::vector<PwSatInstance> random_pwsat(int vars, int clauses, int k, int count, std::uint64_t seed);
// Exactly `tiles` distinct tiles each.
std::vector<SquareTilingInstance> random_square_tilings(int colors, int tiles, int k, int count,
                                                        std::uint64_t seed);
std::vector<RectTilingInstance> random_rect_tilings(int colors, int tiles, int count, std::uint64_t seed);

}  // namespace ltlwb::cli
