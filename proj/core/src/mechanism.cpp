#include "tanglerate/mechanism.hpp"

#include <cmath>
#include <stdexcept>

namespace tanglerate {

double ExpCostModel::cost(int level, double power) const {
  if (level < 1) throw std::domain_error("proof-of-work level must be >= 1");
  if (!(power > 0.0)) throw std::domain_error("power must be positive");
  return std::exp(static_cast<double>(level)) / power;
}

const CostModel& default_cost_model() {
  static const ExpCostModel model;
  return model;
}

double pow_cost(int level, double power) {
  return default_cost_model().cost(level, power);
}

double agent_utility(double weight, int level, double power, double beta) {
  return beta * weight - pow_cost(level, power);
}

double transaction_rate(double power, int level) {
  if (level < 1) throw std::domain_error("proof-of-work level must be >= 1");
  if (!(power > 0.0)) throw std::domain_error("power must be positive");
  return power * std::exp(-static_cast<double>(level));
}

std::string ConstraintTag::str() const {
  switch (kind) {
    case Kind::incentive:
      return "IC(" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")";
    case Kind::participation:
      return "PC(" + std::to_string(i + 1) + ")";
    case Kind::lower_bound:
      return "LB(" + std::to_string(i + 1) + ")";
    case Kind::normalization:
      return "NORM";
  }
  return "?";
}

double ConstraintRow::slack(const WeightVector& w) const {
  double lhs = 0.0;
  for (std::size_t k = 0; k < coeffs.size(); ++k)
    lhs += coeffs[k] * w.values.at(k);
  return lhs - rhs;
}

ConstraintSystem build_constraints(const MechanismConfig& config,
                                   const DifficultyVector& d,
                                   const CostModel& model) {
  config.validate();
  validate(config, d);
  const int n = config.num_types();
  ConstraintSystem sys;
  sys.num_types = n;
  sys.rows.reserve(static_cast<std::size_t>(n) * (n + 2) + 1);

  // Truthful reporting: beta*w(i) - cost(d(i), x_i) >= beta*w(j) - cost(d(j), x_i)
  for (int i = 0; i < n; ++i) {
    const double x = config.types.power(i);
    for (int j = 0; j < n; ++j) {
      if (j == i) continue;
      ConstraintRow row;
      row.coeffs.assign(n, 0.0);
      row.coeffs[i] = config.beta;
      row.coeffs[j] = -config.beta;
      row.rhs = model.cost(d.level(i), x) - model.cost(d.level(j), x);
      row.tag = {ConstraintTag::Kind::incentive, i, j};
      sys.rows.push_back(std::move(row));
    }
  }
  // Participation: beta*w(i) >= u0 + cost(d(i), x_i)
  for (int i = 0; i < n; ++i) {
    ConstraintRow row;
    row.coeffs.assign(n, 0.0);
    row.coeffs[i] = config.beta;
    row.rhs = config.u0 + model.cost(d.level(i), config.types.power(i));
    row.tag = {ConstraintTag::Kind::participation, i, 0};
    sys.rows.push_back(std::move(row));
  }
  // Minimum weight: w(i) >= 1
  for (int i = 0; i < n; ++i) {
    ConstraintRow row;
    row.coeffs.assign(n, 0.0);
    row.coeffs[i] = 1.0;
    row.rhs = 1.0;
    row.tag = {ConstraintTag::Kind::lower_bound, i, 0};
    sys.rows.push_back(std::move(row));
  }
  // Normalization: w(1) = 1
  ConstraintRow norm;
  norm.coeffs.assign(n, 0.0);
  norm.coeffs[0] = 1.0;
  norm.rhs = 1.0;
  norm.tag = {ConstraintTag::Kind::normalization, 0, 0};
  sys.rows.push_back(std::move(norm));
  return sys;
}

double objective(const MechanismConfig& config, const DifficultyVector& d,
                 const WeightVector& w) {
  validate(config, d);
  if (w.size() != d.size())
    throw ValidationError("weight vector length does not match difficulties");
  double total = 0.0;
  for (int i = 0; i < d.size(); ++i) {
    const double p = config.types.fraction(i);
    const double rate = transaction_rate(config.types.power(i), d.level(i));
    total += p * (static_cast<double>(config.num_agents) * rate +
                  config.alpha * w.value(i));
  }
  return total;
}

ObjectiveFn default_objective() {
  return [](const MechanismConfig& c, const DifficultyVector& d,
            const WeightVector& w) { return objective(c, d, w); };
}

Assignment fixed_linear_scheme(const MechanismConfig& config, double slope,
                               double intercept, const CostModel& model) {
  config.validate();
  const int n = config.num_types();
  Assignment a;
  a.provenance = Provenance::baseline;
  a.d.levels.resize(n);
  a.w.values.resize(n);
  for (int i = 0; i < n; ++i) {
    const double x = config.types.power(i);
    int best_level = 1;
    double best_score = config.beta * (intercept + slope) - model.cost(1, x);
    for (int lv = 2; lv <= config.max_difficulty; ++lv) {
      const double score =
          config.beta * (intercept + slope * lv) - model.cost(lv, x);
      if (score > best_score) {
        best_score = score;
        best_level = lv;
      }
    }
    a.d.levels[i] = best_level;
    a.w.values[i] = intercept + slope * best_level;
  }
  validate(config, a);
  return a;
}

}  // namespace tanglerate
