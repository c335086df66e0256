#pragma once

#include <array>
#include <string>
#include <string_view>
#include <vector>

#include "ltlwb/formula.hpp"

namespace ltlwb {

// Literals are DIMACS-style: v or -v for variable v in 1..num_vars.
struct Cnf {
  int num_vars = 0;
  std::vector<std::vector<int>> clauses;
};

struct Cnf3 {
  int num_vars = 0;
  std::vector<std::array<int, 3>> clauses;

  Cnf to_cnf() const;
};

Cnf parse_dimacs(std::string_view text);
std::string write_dimacs(const Cnf& c);
Cnf3 to_cnf3(const Cnf& c);

bool satisfies(const Cnf& c, const std::vector<bool>& assignment);

// Left-nested conjunction of left-nested clause disjunctions over prefix<i>.
Formula cnf_formula(const Cnf& c, const std::string& prefix);

}  // namespace ltlwb
