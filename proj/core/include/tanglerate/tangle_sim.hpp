#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <random>
#include <span>
#include <utility>
#include <vector>

#include "tanglerate/types.hpp"

namespace tanglerate {

/*
 * Discrete-time DAG ledger simulation.
 *
 * Each step: last step's arrivals become eligible tips, then new
 * transactions arrive (one batch per type) and every one of them picks two
 * tips from that same pre-step snapshot, independently, with repetition,
 * with probability proportional to tip weight. A tip leaves the tip set at
 * the end of the step in which it receives its first approver; the one-step
 * visibility delay means same-step arrivals can never approve each other.
 */

using TxId = std::uint32_t;
using Rng = std::mt19937_64;

inline constexpr int kGenesisOwner = -1;

struct Transaction {
  TxId id = 0;
  int owner_type = kGenesisOwner;  // 0-based type index
  double weight = 1.0;
  std::int64_t created_at = 0;
  std::optional<std::int64_t> approved_at;
  std::optional<std::array<TxId, 2>> approves;  // absent only for genesis
};

enum class ArrivalModel { poisson, deterministic };

struct SimConfig {
  MechanismConfig config;
  Assignment assignment;
  std::int64_t horizon = 2000;
  std::uint64_t seed = 42;
  ArrivalModel arrival_model = ArrivalModel::poisson;

  void validate() const;
};

struct TangleState {
  std::vector<Transaction> transactions;  // indexed by id
  std::vector<TxId> tips;     // no approver, visible to this step's arrivals
  std::vector<TxId> pending;  // created this step, eligible next step
  std::int64_t clock = 0;

  static TangleState genesis();
};

// Expected batch size for each type is N * p(x) * transaction_rate(x, d(x)).
// Poisson draws one count per type; deterministic rounds the mean to the
// nearest integer (ties to even).
std::vector<std::int64_t> arrivals_for_step(const MechanismConfig& config,
                                            const Assignment& a,
                                            ArrivalModel model, Rng& rng);

// Weight-proportional draw by accept-reject: propose uniformly, accept with
// probability weight / max_weight.
std::size_t sample_weighted_index(std::span<const double> weights,
                                  double max_weight, Rng& rng);

// Two independent weight-proportional draws from the current tip set,
// repetition allowed.
std::pair<TxId, TxId> select_tips(const TangleState& state, Rng& rng);

void step(TangleState& state, const SimConfig& sim, Rng& rng);

struct TypeApproval {
  std::int64_t created = 0;
  std::int64_t approved = 0;
  std::int64_t unapproved = 0;
  std::optional<double> mean_approval_time;  // absent when nothing approved
};

struct ApprovalStats {
  std::vector<TypeApproval> per_type;
  TypeApproval genesis;
};

ApprovalStats approval_stats(const TangleState& state, int num_types);

struct SimMetrics {
  ApprovalStats approvals;
  std::int64_t final_tip_count = 0;  // transactions with no approver
  std::int64_t total_transactions = 0;
};

SimMetrics run(const SimConfig& sim);

}  // namespace tanglerate
