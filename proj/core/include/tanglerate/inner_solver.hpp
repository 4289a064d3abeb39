#pragma once

#include <string>
#include <vector>

#include "tanglerate/mechanism.hpp"
#include "tanglerate/types.hpp"

namespace tanglerate {

struct InnerResult {
  enum class Status { feasible, infeasible };

  Status status = Status::infeasible;
  WeightVector w;  // empty when infeasible
  // Per type, the constraint rows with zero slack at the solution. For every
  // type above the lowest at least one lower-bounding row binds, which is the
  // certificate that no weight can be reduced.
  std::vector<std::vector<ConstraintTag>> binding;
  std::string reason;       // human-readable infeasibility witness
  double violation = 0.0;   // size of the unsatisfiable gap, weight units
  int sweeps = 0;           // relaxation sweeps until the fixpoint

  bool feasible() const { return status == Status::feasible; }
};

// Minimal weights compatible with truthfulness, participation, the unit
// floor, and w(1) = 1, for a fixed difficulty vector. The incentive rows
// only ever couple pairs of weights with unit coefficients, so the minimal
// point is the least fixpoint of the lower-bound map and is reached by
// Bellman-Ford style sweeps; n-1 sweeps suffice, and a change during one
// extra sweep certifies a positive-gain cycle (no finite solution).
InnerResult solve_weights(const MechanismConfig& config,
                          const DifficultyVector& d,
                          const CostModel& model = default_cost_model());

// Grid-scan oracle for cross-checking solve_weights on small instances
// (num_types <= 3). Weights range over {1, 1+step, 1+2*step, ...} up to
// w_max, the lowest type's weight stays pinned at 1, and every constraint
// check is relaxed by one grid step so the true optimum is never missed by
// quantization. An infeasible verdict means no grid point passed at that
// resolution.
InnerResult brute_force_weights(const MechanismConfig& config,
                                const DifficultyVector& d, double grid_step,
                                double w_max,
                                const CostModel& model = default_cost_model());

struct VerificationReport {
  struct PerType {
    bool truthful = true;      // no profitable misreport
    bool participates = true;  // utility clears the reservation level
    double min_ic_slack = 0.0; // +inf when there is a single type
    double pc_slack = 0.0;
  };

  std::vector<PerType> per_type;
  double min_slack = 0.0;  // utility units, over every check performed

  bool all_passed(double tol = kFeasibilityTol) const;
};

// Independent check that an assignment leaves no type better off lying or
// leaving. Works for baseline assignments too.
VerificationReport verify_assignment(const MechanismConfig& config,
                                     const Assignment& a,
                                     const CostModel& model = default_cost_model());

}  // namespace tanglerate
