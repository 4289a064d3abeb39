#include "tanglerate/types.hpp"

#include <cmath>

namespace tanglerate {

void AgentTypeSet::validate() const {
  if (entries.empty()) throw ValidationError("type set is empty");
  double total = 0.0;
  for (std::size_t i = 0; i < entries.size(); ++i) {
    const auto& t = entries[i];
    if (!(t.power > 0.0))
      throw ValidationError("type " + std::to_string(i + 1) +
                            " has non-positive power");
    if (i > 0 && !(t.power > entries[i - 1].power))
      throw ValidationError("powers must be strictly increasing (type " +
                            std::to_string(i + 1) + ")");
    if (!(t.fraction > 0.0) || t.fraction > 1.0)
      throw ValidationError("type " + std::to_string(i + 1) +
                            " has fraction outside (0, 1]");
    total += t.fraction;
  }
  if (std::abs(total - 1.0) > kFeasibilityTol)
    throw ValidationError("type fractions sum to " + std::to_string(total) +
                          ", expected 1");
}

void MechanismConfig::validate() const {
  types.validate();
  if (max_difficulty < 1)
    throw ValidationError("max_difficulty must be at least 1");
  if (!(alpha >= 0.0)) throw ValidationError("alpha must be non-negative");
  if (!(beta > 0.0)) throw ValidationError("beta must be positive");
  if (!std::isfinite(u0)) throw ValidationError("u0 must be finite");
  if (num_agents < 1) throw ValidationError("N must be at least 1");
}

void validate(const MechanismConfig& config, const DifficultyVector& d) {
  if (d.size() != config.num_types())
    throw ValidationError("difficulty vector has " + std::to_string(d.size()) +
                          " entries for " + std::to_string(config.num_types()) +
                          " types");
  for (int i = 0; i < d.size(); ++i) {
    const int lv = d.levels[i];
    if (lv < 1 || lv > config.max_difficulty)
      throw ValidationError("difficulty for type " + std::to_string(i + 1) +
                            " is " + std::to_string(lv) + ", outside {1..." +
                            std::to_string(config.max_difficulty) + "}");
  }
}

void validate(const MechanismConfig& config, const WeightVector& w,
              Provenance provenance) {
  if (w.size() != config.num_types())
    throw ValidationError("weight vector has " + std::to_string(w.size()) +
                          " entries for " + std::to_string(config.num_types()) +
                          " types");
  for (int i = 0; i < w.size(); ++i) {
    const double v = w.values[i];
    if (!std::isfinite(v) || v < 1.0 - kFeasibilityTol)
      throw ValidationError("weight for type " + std::to_string(i + 1) +
                            " is below the minimum weight 1");
  }
  if (provenance == Provenance::mechanism &&
      std::abs(w.values.front() - 1.0) > kFeasibilityTol)
    throw ValidationError("lowest type's weight must equal 1");
}

void validate(const MechanismConfig& config, const Assignment& a) {
  validate(config, a.d);
  validate(config, a.w, a.provenance);
}

}  // namespace tanglerate
