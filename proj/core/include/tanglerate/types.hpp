#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace tanglerate {

// Tolerance used when deciding whether a linear constraint is satisfied
// or binding. Violations smaller than this are treated as rounding noise.
inline constexpr double kFeasibilityTol = 1e-9;

class ValidationError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

struct AgentType {
  double power = 1.0;     // hashing power x
  double fraction = 1.0;  // population share p(x)
};

// Agent population sorted by power, lowest first.
struct AgentTypeSet {
  std::vector<AgentType> entries;

  int size() const { return static_cast<int>(entries.size()); }
  double power(int i) const { return entries.at(i).power; }
  double fraction(int i) const { return entries.at(i).fraction; }

  // Throws ValidationError unless powers are positive and strictly
  // increasing and fractions are positive and sum to 1 (within 1e-9).
  void validate() const;
};

struct MechanismConfig {
  AgentTypeSet types;
  int max_difficulty = 1;      // difficulty menu is {1, ..., max_difficulty}
  double alpha = 0.0;          // weight penalty in the principal's objective
  double beta = 1.0;           // marginal value agents place on weight
  double u0 = 0.0;             // reservation utility for participation
  std::int64_t num_agents = 1;

  int num_types() const { return types.size(); }
  void validate() const;
};

// One difficulty level per type, same order as the type set.
struct DifficultyVector {
  std::vector<int> levels;

  int size() const { return static_cast<int>(levels.size()); }
  int level(int i) const { return levels.at(i); }
  bool operator==(const DifficultyVector&) const = default;
};

struct WeightVector {
  std::vector<double> values;

  int size() const { return static_cast<int>(values.size()); }
  double value(int i) const { return values.at(i); }
  bool operator==(const WeightVector&) const = default;
};

// Baseline assignments come from a fixed published scheme and are exempt
// from the lowest-type weight normalization.
enum class Provenance { mechanism, baseline };

struct Assignment {
  DifficultyVector d;
  WeightVector w;
  Provenance provenance = Provenance::mechanism;
};

void validate(const MechanismConfig& config, const DifficultyVector& d);
void validate(const MechanismConfig& config, const WeightVector& w,
              Provenance provenance = Provenance::mechanism);
void validate(const MechanismConfig& config, const Assignment& a);

}  // namespace tanglerate
