#pragma once

#include <optional>
#include <string>

#include "ltlwb/checker.hpp"
#include "ltlwb/cnf.hpp"
#include "ltlwb/formula.hpp"
#include "ltlwb/graph.hpp"
#include "ltlwb/instances.hpp"

namespace ltlwb {

// as_printed emits the constructions symbol for symbol; repaired applies the
// minimal corrections needed for soundness where the two differ.
enum class Fidelity { repaired, as_printed };
enum class Mutation { none, drop_conjunct };

struct ReductionOptions {
  Fidelity fidelity = Fidelity::repaired;
  Mutation mutation = Mutation::none;
};

struct Certificate {
  int td = -1;
  int delta = -1;
  int nvar = -1;
  int width = -1;

  // `cert td=.. delta=.. nvar=.. width=..`, with `-` for absent values.
  std::string line() const;
};

struct ReductionOutput {
  enum class Target { sat, mc };
  enum class WitnessOf { formula, structure };

  Target target = Target::sat;
  // SAT: the formula to test. MC: the already complemented formula of mc.
  Formula formula;
  std::optional<McInstance> mc;
  std::optional<Decomposition> witness;
  WitnessOf witness_of = WitnessOf::formula;
  FragmentSet fragment;
  Certificate cert;
};

// Graph that the witness decomposes.
Graph witness_graph(const ReductionOutput& out);

// Source answer equals sat(formula) != none for SAT targets and the negation
// of mc_universal for MC targets.
bool source_answer_from_target(const ReductionOutput& out, bool target_answer);

// Vertex separation of the variable order 1..n where each clause counts as
// placed at the running maximum of the variables seen so far in file order.
// Equals the primal vertex separation of 1..n when clauses are sorted by
// their largest variable.
int clause_schedule_separation(const Cnf& c);
// Width the pwsat witness is stretched to: 23 + 2k + clause schedule
// separation.
int pwsat_witness_width(const PwSatInstance& i);

ReductionOutput reduce_pwsat_to_sat(const PwSatInstance& i, FragmentSet target = {Temporal::F, Temporal::G},
                                    const ReductionOptions& opt = {});
ReductionOutput reduce_3sat_to_mc(const Cnf3& c, Temporal op, const ReductionOptions& opt = {});
ReductionOutput reduce_sqtiling_to_mc_x(const SquareTilingInstance& t, const ReductionOptions& opt = {});
ReductionOutput reduce_sqtiling_to_mc_t(const SquareTilingInstance& t, Temporal op,
                                        const ReductionOptions& opt = {});
// Widths the rectangle witnesses are stretched to; every instance's natural
// witness fits under them.
constexpr int kRectXfWitnessWidth = 20;
constexpr int kRectUWitnessWidth = 25;

ReductionOutput reduce_recttiling_to_mc_xf(const RectTilingInstance& t, const ReductionOptions& opt = {});
ReductionOutput reduce_recttiling_to_mc_u(const RectTilingInstance& t, const ReductionOptions& opt = {});

}  // namespace ltlwb
