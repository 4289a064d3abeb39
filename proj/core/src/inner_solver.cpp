#include "tanglerate/inner_solver.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace tanglerate {

namespace {

std::string fmt(double v) {
  std::ostringstream os;
  os.precision(10);
  os << v;
  return os.str();
}

}  // namespace

InnerResult solve_weights(const MechanismConfig& config,
                          const DifficultyVector& d, const CostModel& model) {
  config.validate();
  validate(config, d);
  const int n = config.num_types();
  const double beta = config.beta;

  // gain[i][j]: IC(i,j) rewritten as w(i) >= w(j) + gain[i][j].
  std::vector<std::vector<double>> gain(n, std::vector<double>(n, 0.0));
  std::vector<double> floor_w(n);
  for (int i = 0; i < n; ++i) {
    const double x = config.types.power(i);
    const double own = model.cost(d.level(i), x);
    for (int j = 0; j < n; ++j) {
      if (j == i) continue;
      gain[i][j] = (own - model.cost(d.level(j), x)) / beta;
    }
    floor_w[i] = std::max(1.0, (config.u0 + own) / beta);
  }

  InnerResult res;
  if (floor_w[0] > 1.0 + kFeasibilityTol) {
    res.violation = floor_w[0] - 1.0;
    res.reason = "participation requires w(1) >= " + fmt(floor_w[0]) +
                 " but the normalization pins w(1) = 1";
    return res;
  }

  std::vector<double> w(n);
  w[0] = 1.0;
  for (int i = 1; i < n; ++i) w[i] = floor_w[i];

  // Raise weights to the least fixpoint of the lower-bound map. A change
  // during the n-th sweep means some incentive cycle has positive gain, so
  // the bounds diverge.
  constexpr double kChangeTol = 1e-12;
  ConstraintTag last_raise;
  double last_amount = 0.0;
  for (int sweep = 0; sweep < n; ++sweep) {
    bool changed = false;
    for (int i = 1; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        if (j == i) continue;
        const double cand = w[j] + gain[i][j];
        if (cand > w[i] + kChangeTol) {
          last_raise = {ConstraintTag::Kind::incentive, i, j};
          last_amount = cand - w[i];
          w[i] = cand;
          changed = true;
        }
      }
    }
    if (!changed) break;
    res.sweeps = sweep + 1;
    if (sweep == n - 1) {
      res.violation = last_amount;
      res.reason = "incentive rows form a positive-gain cycle; " +
                   last_raise.str() + " still raises w(" +
                   std::to_string(last_raise.i + 1) + ") after " +
                   std::to_string(n) + " sweeps";
      return res;
    }
  }

  // The pinned weight turns each IC(1,j) into a cap on w(j).
  int worst_j = -1;
  double worst_gap = kFeasibilityTol;
  for (int j = 1; j < n; ++j) {
    const double gap = (w[j] + gain[0][j]) - 1.0;
    if (gap > worst_gap) {
      worst_gap = gap;
      worst_j = j;
    }
  }
  if (worst_j >= 0) {
    res.violation = worst_gap;
    res.reason = "IC(1," + std::to_string(worst_j + 1) + ") caps w(" +
                 std::to_string(worst_j + 1) + ") at " +
                 fmt(1.0 - gain[0][worst_j]) + " but its lower bounds demand " +
                 fmt(w[worst_j]);
    return res;
  }

  res.status = InnerResult::Status::feasible;
  res.w.values = std::move(w);

  const auto sys = build_constraints(config, d, model);
  for (const auto& row : sys.rows) {
    const double s = row.slack(res.w);
    const bool bad =
        row.equality() ? std::abs(s) > kFeasibilityTol : s < -kFeasibilityTol;
    if (bad)
      throw std::logic_error("inner solve produced weights violating " +
                             row.tag.str());
  }

  res.binding.assign(n, {});
  for (const auto& row : sys.rows)
    if (std::abs(row.slack(res.w)) <= kFeasibilityTol)
      res.binding[row.tag.i].push_back(row.tag);

  return res;
}

InnerResult brute_force_weights(const MechanismConfig& config,
                                const DifficultyVector& d, double grid_step,
                                double w_max, const CostModel& model) {
  config.validate();
  validate(config, d);
  const int n = config.num_types();
  if (n > 3)
    throw std::invalid_argument("grid oracle supports at most 3 types");
  if (!(grid_step > 0.0))
    throw std::invalid_argument("grid_step must be positive");
  if (!(w_max >= 1.0)) throw std::invalid_argument("w_max must be at least 1");

  const double beta = config.beta;
  const double slack_budget = beta * grid_step;
  std::vector<double> x(n), own_cost(n);
  for (int i = 0; i < n; ++i) {
    x[i] = config.types.power(i);
    own_cost[i] = model.cost(d.level(i), x[i]);
  }

  // Every check relaxed by one grid step (in utility units) so quantization
  // never flips a verdict on a boundary.
  auto ok = [&](const std::vector<double>& w) {
    for (int i = 0; i < n; ++i) {
      const double truthful = beta * w[i] - own_cost[i];
      if (truthful < config.u0 - slack_budget) return false;
      for (int j = 0; j < n; ++j) {
        if (j == i) continue;
        const double other =
            beta * w[j] - model.cost(d.level(j), x[i]);
        if (truthful < other - slack_budget) return false;
      }
    }
    return true;
  };

  auto feasible_at = [&](std::vector<double> w) {
    InnerResult r;
    r.status = InnerResult::Status::feasible;
    r.w.values = std::move(w);
    r.binding.assign(n, {});
    return r;
  };
  auto no_point = [&]() {
    InnerResult r;
    r.reason = "no grid point feasible at resolution " + fmt(grid_step) +
               " with weights scanned up to " + fmt(w_max);
    return r;
  };

  if (n == 1) {
    if (ok({1.0})) return feasible_at({1.0});
    return no_point();
  }

  // Skipping grid points that provably fail one single row is pure pruning:
  // below the relaxed PC(j)/IC(j,1) floors or above the relaxed IC(1,j) cap
  // that row alone rejects the point, so the first point the scan accepts is
  // still the first feasible one.
  auto first_step = [&](int j, double extra_floor) {
    const double pc = (config.u0 + own_cost[j]) / beta;
    const double ic1 =
        1.0 + (own_cost[j] - model.cost(d.level(0), x[j])) / beta;
    const double lo =
        std::max({1.0, pc - grid_step, ic1 - grid_step, extra_floor});
    return static_cast<long>(
        std::ceil((lo - 1.0) / grid_step - 1e-9));
  };
  auto last_step = [&](int j) {
    const double cap =
        1.0 + (model.cost(d.level(j), x[0]) - own_cost[0]) / beta;
    const double top = std::min(w_max, cap + grid_step);
    return static_cast<long>(std::floor((top - 1.0) / grid_step + 1e-9));
  };
  auto at = [&](long k) { return 1.0 + static_cast<double>(k) * grid_step; };

  if (n == 2) {
    for (long k = first_step(1, 1.0); k <= last_step(1); ++k)
      if (ok({1.0, at(k)})) return feasible_at({1.0, at(k)});
    return no_point();
  }

  // n == 3: lower bounds on the third weight only grow with the second and
  // the caps through the pinned weight do not depend on it, so the first
  // feasible column already holds the componentwise-minimal point.
  auto ok_pair = [&](double w1) {  // rows touching only w(1) and w(2)
    const double u1 = beta * w1 - own_cost[1];
    if (u1 < config.u0 - slack_budget) return false;
    if (u1 < beta * 1.0 - model.cost(d.level(0), x[1]) - slack_budget)
      return false;
    const double u0_own = beta * 1.0 - own_cost[0];
    return u0_own >= beta * w1 - model.cost(d.level(1), x[0]) - slack_budget;
  };
  const double gain_32 =
      (own_cost[2] - model.cost(d.level(1), x[2])) / beta;
  const long last1 = last_step(1);
  const long last2 = last_step(2);
  for (long k1 = first_step(1, 1.0); k1 <= last1; ++k1) {
    const double w1 = at(k1);
    if (!ok_pair(w1)) continue;
    // Below w(2) + gain the IC row of the top type against the middle type
    // fails on its own.
    for (long k2 = first_step(2, w1 + gain_32 - grid_step); k2 <= last2; ++k2)
      if (ok({1.0, w1, at(k2)})) return feasible_at({1.0, w1, at(k2)});
  }
  return no_point();
}

bool VerificationReport::all_passed(double tol) const {
  return min_slack >= -tol;
}

VerificationReport verify_assignment(const MechanismConfig& config,
                                     const Assignment& a,
                                     const CostModel& model) {
  config.validate();
  validate(config, a);
  const int n = config.num_types();
  VerificationReport rep;
  rep.per_type.resize(n);
  double global = std::numeric_limits<double>::infinity();
  for (int i = 0; i < n; ++i) {
    const double x = config.types.power(i);
    const double own = config.beta * a.w.value(i) - model.cost(a.d.level(i), x);
    auto& row = rep.per_type[i];
    row.min_ic_slack = std::numeric_limits<double>::infinity();
    for (int j = 0; j < n; ++j) {
      if (j == i) continue;
      const double other =
          config.beta * a.w.value(j) - model.cost(a.d.level(j), x);
      row.min_ic_slack = std::min(row.min_ic_slack, own - other);
    }
    row.pc_slack = own - config.u0;
    row.truthful = !(row.min_ic_slack < -kFeasibilityTol);
    row.participates = row.pc_slack >= -kFeasibilityTol;
    global = std::min(global, row.pc_slack);
    if (n > 1) global = std::min(global, row.min_ic_slack);
  }
  rep.min_slack = global;
  return rep;
}

}  // namespace tanglerate
