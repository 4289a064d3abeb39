#include "tanglerate/outer_search.hpp"

#include <cmath>
#include <limits>

namespace tanglerate {

namespace {

void check_dims(int n, int m) {
  if (n < 1) throw std::invalid_argument("need at least one type");
  if (m < 1) throw std::invalid_argument("need at least one difficulty level");
}

std::string vec_str(const DifficultyVector& d) {
  std::string s = "[";
  for (int i = 0; i < d.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(d.levels[i]);
  }
  return s + "]";
}

}  // namespace

std::uint64_t count_monotone(int n, int m) {
  check_dims(n, m);
  // C(n+m-1, n) built factor by factor; the running value is always the
  // exact binomial C(m-1+k, k), so each division is exact.
  unsigned __int128 result = 1;
  for (int k = 1; k <= n; ++k) {
    const auto factor = static_cast<unsigned __int128>(m - 1 + k);
    const unsigned __int128 next = result * factor;
    if (next / factor != result)
      throw std::overflow_error("candidate count exceeds 64 bits");
    result = next / static_cast<unsigned>(k);
  }
  if (result > std::numeric_limits<std::uint64_t>::max())
    throw std::overflow_error("candidate count exceeds 64 bits");
  return static_cast<std::uint64_t>(result);
}

void for_each_monotone(int n, int m,
                       const std::function<void(const DifficultyVector&)>& fn) {
  check_dims(n, m);
  DifficultyVector d;
  d.levels.assign(n, 1);
  while (true) {
    fn(d);
    int pos = n - 1;
    while (pos >= 0 && d.levels[pos] == m) --pos;
    if (pos < 0) return;
    const int next = d.levels[pos] + 1;
    for (int k = pos; k < n; ++k) d.levels[k] = next;
  }
}

std::vector<DifficultyVector> enumerate_monotone(int n, int m) {
  std::vector<DifficultyVector> out;
  out.reserve(count_monotone(n, m));
  for_each_monotone(n, m,
                    [&](const DifficultyVector& d) { out.push_back(d); });
  return out;
}

void for_each_vector(int n, int m,
                     const std::function<void(const DifficultyVector&)>& fn) {
  check_dims(n, m);
  DifficultyVector d;
  d.levels.assign(n, 1);
  while (true) {
    fn(d);
    int pos = n - 1;
    while (pos >= 0 && d.levels[pos] == m) {
      d.levels[pos] = 1;
      --pos;
    }
    if (pos < 0) return;
    ++d.levels[pos];
  }
}

MechanismSolution solve_mechanism(const MechanismConfig& config,
                                  SearchMode mode, const CostModel& model,
                                  const ObjectiveFn& objective_fn) {
  config.validate();
  const int n = config.num_types();
  const int m = config.max_difficulty;
  if (mode == SearchMode::exhaustive &&
      std::pow(static_cast<double>(m), n) > 1e6)
    throw std::invalid_argument(
        "exhaustive search over " + std::to_string(m) + "^" +
        std::to_string(n) + " candidates exceeds the 10^6 cap");

  MechanismSolution best;
  best.mode = mode;
  bool found = false;
  double best_obj = std::numeric_limits<double>::infinity();
  DifficultyVector nearest;
  std::string nearest_reason;
  double nearest_violation = std::numeric_limits<double>::infinity();
  std::uint64_t examined = 0;
  std::uint64_t feasible_count = 0;

  auto visit = [&](const DifficultyVector& d) {
    ++examined;
    auto inner = solve_weights(config, d, model);
    if (!inner.feasible()) {
      if (inner.violation < nearest_violation) {
        nearest_violation = inner.violation;
        nearest = d;
        nearest_reason = inner.reason;
      }
      return;
    }
    ++feasible_count;
    const double val = objective_fn ? objective_fn(config, d, inner.w)
                                    : objective(config, d, inner.w);
    // Strict improvement keeps the earliest (lexicographically smallest)
    // difficulty vector on ties.
    if (!found || val < best_obj) {
      found = true;
      best_obj = val;
      best.assignment = {d, std::move(inner.w), Provenance::mechanism};
    }
  };

  if (mode == SearchMode::pruned)
    for_each_monotone(n, m, visit);
  else
    for_each_vector(n, m, visit);

  if (!found)
    throw NoFeasibleMechanismError(
        "no feasible mechanism: every candidate difficulty vector fails; "
        "closest candidate " +
            vec_str(nearest) + " fails with: " + nearest_reason,
        nearest, nearest_reason, nearest_violation);

  best.objective_value = best_obj;
  best.candidates_examined = examined;
  best.candidates_feasible = feasible_count;

  for (int i = 1; i < n; ++i) {
    if (best.assignment.d.levels[i] < best.assignment.d.levels[i - 1])
      throw std::logic_error("optimal difficulties are not nondecreasing");
    if (best.assignment.w.values[i] <
        best.assignment.w.values[i - 1] - kFeasibilityTol)
      throw std::logic_error("optimal weights are not nondecreasing");
  }
  if (!verify_assignment(config, best.assignment, model).all_passed())
    throw std::logic_error("optimal assignment fails the truthfulness audit");
  return best;
}

}  // namespace tanglerate
