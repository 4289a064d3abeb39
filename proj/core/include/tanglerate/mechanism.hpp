#pragma once

#include <functional>
#include <string>
#include <vector>

#include "tanglerate/types.hpp"

namespace tanglerate {

// Expected effort an agent spends to issue one transaction at a given
// proof-of-work level. Implementations must be increasing in the level and
// exhibit decreasing differences: for levels a < b, cost(b, x) - cost(a, x)
// shrinks as the power x grows. That single-crossing property is what makes
// the difficulty menu screen types.
class CostModel {
public:
  virtual ~CostModel() = default;
  virtual double cost(int level, double power) const = 0;
};

// Default model: exp(level) / power. Each extra level multiplies the
// expected number of hash evaluations by e, and stronger hardware divides
// the time spent.
class ExpCostModel final : public CostModel {
public:
  double cost(int level, double power) const override;
};

const CostModel& default_cost_model();

// exp(level) / power under the default model. Throws std::domain_error for
// level < 1 or power <= 0.
double pow_cost(int level, double power);

// beta * weight - pow_cost(level, power).
double agent_utility(double weight, int level, double power, double beta);

// Transactions per unit time an agent of the given power sustains while
// solving proofs at the given level: power * exp(-level).
double transaction_rate(double power, int level);

struct ConstraintTag {
  enum class Kind { incentive, participation, lower_bound, normalization };

  Kind kind = Kind::normalization;
  int i = 0;  // 0-based type index
  int j = 0;  // 0-based reported type, incentive rows only

  std::string str() const;
  bool operator==(const ConstraintTag&) const = default;
};

// One linear row over the weight vector: coeffs . w >= rhs, except the
// normalization row which is an equality.
struct ConstraintRow {
  std::vector<double> coeffs;
  double rhs = 0.0;
  ConstraintTag tag;

  bool equality() const {
    return tag.kind == ConstraintTag::Kind::normalization;
  }
  double slack(const WeightVector& w) const;
};

struct ConstraintSystem {
  std::vector<ConstraintRow> rows;
  int num_types = 0;
};

// Rows, in order: incentive rows IC(i,j) for all ordered pairs i != j, then
// participation rows PC(i), minimum-weight rows LB(i), and the normalization
// row pinning the lowest type's weight to 1.
ConstraintSystem build_constraints(const MechanismConfig& config,
                                   const DifficultyVector& d,
                                   const CostModel& model = default_cost_model());

// Principal's objective hook. Any replacement must be monotone nondecreasing
// in every weight, otherwise minimizing weights per difficulty vector no
// longer yields the global optimum.
using ObjectiveFn = std::function<double(
    const MechanismConfig&, const DifficultyVector&, const WeightVector&)>;

// sum over types of p(x) * (N * transaction_rate(x, d(x)) + alpha * w(x)).
double objective(const MechanismConfig& config, const DifficultyVector& d,
                 const WeightVector& w);

ObjectiveFn default_objective();

// Published linear menu w = intercept + slope * d: every type best-responds
// with the level maximizing its own utility (ties broken toward the smaller
// level) and receives the corresponding weight.
Assignment fixed_linear_scheme(const MechanismConfig& config, double slope,
                               double intercept,
                               const CostModel& model = default_cost_model());

}  // namespace tanglerate
