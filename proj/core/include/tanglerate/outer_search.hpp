#pragma once

#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

#include "tanglerate/inner_solver.hpp"
#include "tanglerate/mechanism.hpp"
#include "tanglerate/types.hpp"

namespace tanglerate {

enum class SearchMode {
  pruned,      // nondecreasing difficulty vectors only
  exhaustive,  // every vector in {1..m}^n, for cross-checking
};

struct MechanismSolution {
  Assignment assignment;
  double objective_value = 0.0;
  std::uint64_t candidates_examined = 0;
  std::uint64_t candidates_feasible = 0;
  SearchMode mode = SearchMode::pruned;
};

// Raised when no difficulty vector admits feasible weights. Carries the
// candidate that came closest (smallest constraint violation) and why it
// failed.
class NoFeasibleMechanismError : public std::runtime_error {
public:
  NoFeasibleMechanismError(const std::string& what, DifficultyVector nearest,
                           std::string witness, double violation)
      : std::runtime_error(what),
        nearest_(std::move(nearest)),
        witness_(std::move(witness)),
        violation_(violation) {}

  const DifficultyVector& nearest_candidate() const { return nearest_; }
  const std::string& witness() const { return witness_; }
  double violation() const { return violation_; }

private:
  DifficultyVector nearest_;
  std::string witness_;
  double violation_;
};

// Number of nondecreasing vectors of length n over {1..m}: C(n+m-1, n).
// Throws std::overflow_error if the count does not fit in 64 bits.
std::uint64_t count_monotone(int n, int m);

// Visits nondecreasing vectors in lexicographic order, starting at all-ones.
void for_each_monotone(int n, int m,
                       const std::function<void(const DifficultyVector&)>& fn);

std::vector<DifficultyVector> enumerate_monotone(int n, int m);

// Visits every vector in {1..m}^n in lexicographic order.
void for_each_vector(int n, int m,
                     const std::function<void(const DifficultyVector&)>& fn);

// Exact minimizer of the principal's objective over the difficulty menu and
// feasible weight vectors. Ties on the objective break toward the
// lexicographically smaller difficulty vector; weights per difficulty vector
// are already componentwise minimal. Exhaustive mode refuses menus with more
// than 10^6 candidate vectors.
MechanismSolution solve_mechanism(const MechanismConfig& config,
                                  SearchMode mode = SearchMode::pruned,
                                  const CostModel& model = default_cost_model(),
                                  const ObjectiveFn& objective_fn = {});

}  // namespace tanglerate
