#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "tanglerate/tangle_sim.hpp"
#include "tanglerate/types.hpp"

namespace tanglerate {

class ConfigError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

struct SimSettings {
  std::int64_t horizon = 2000;
  std::uint64_t seed = 42;
  ArrivalModel arrival_model = ArrivalModel::poisson;
};

struct BaselineParams {
  double slope = 1.0;
  double intercept = 0.0;
};

struct RunConfig {
  MechanismConfig mechanism;  // num_agents defaults to 100
  SimSettings sim;
  BaselineParams baseline;
  std::optional<std::vector<std::int64_t>> sweep;  // "sweep_N" when present

  void validate() const;

  // Population sizes used by solve/sweep/compare: sweep_N when given,
  // otherwise {100, 1000, 10000, 100000}.
  std::vector<std::int64_t> solve_sweep() const;
  // simulate sticks to the config's own N unless sweep_N is explicit.
  std::vector<std::int64_t> simulate_sweep() const;
};

// Parses a config document. Unknown keys and type mismatches raise
// ConfigError naming the offending field; source_name prefixes messages.
RunConfig parse_config(const std::string& text, const std::string& source_name);

RunConfig load_config(const std::string& path);

// The config as consumed, defaults filled in.
std::string effective_config_json(const RunConfig& rc);

}  // namespace tanglerate
