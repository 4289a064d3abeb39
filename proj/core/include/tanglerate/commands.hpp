#pragma once

#include <string>

#include "tanglerate/run_config.hpp"
#include "tanglerate/table.hpp"

namespace tanglerate {

enum class OutputFormat { csv, json };

struct CommandOptions {
  bool exhaustive = false;
  int num_seeds = 20;  // simulation replications per population size
};

// One row per (N, type): the optimal difficulty and weight, the type's
// population transaction rate, and the objective value at that N.
Table cmd_solve(const RunConfig& rc, const CommandOptions& opt = {});

// Solves, then simulates num_seeds runs at the config's N (or at each entry
// of sweep_N when given). One row per (N, seed, type) with approval counts
// and the mean approval time.
Table cmd_simulate(const RunConfig& rc, const CommandOptions& opt = {});

// Same row schema as cmd_simulate but always across the full N sweep.
Table cmd_sweep(const RunConfig& rc, const CommandOptions& opt = {});

// Mechanism vs the fixed linear scheme, one row per (N, type); mech_dw_dd
// holds the slope between consecutive distinct difficulty levels.
Table cmd_compare(const RunConfig& rc, const CommandOptions& opt = {});

// csv: the bare table; json: config echo plus columns and row arrays, reals
// carried at the same six-significant-digit precision as the CSV.
std::string render_output(const Table& table, const RunConfig& rc,
                          OutputFormat format);

}  // namespace tanglerate
