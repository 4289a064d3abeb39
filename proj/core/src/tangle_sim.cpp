#include "tanglerate/tangle_sim.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "tanglerate/mechanism.hpp"

namespace tanglerate {

void SimConfig::validate() const {
  config.validate();
  tanglerate::validate(config, assignment);
  if (horizon < 1) throw ValidationError("horizon must be at least 1");
}

TangleState TangleState::genesis() {
  TangleState s;
  Transaction g;
  g.id = 0;
  g.owner_type = kGenesisOwner;
  g.weight = 1.0;
  g.created_at = 0;
  s.transactions.push_back(g);
  s.pending.push_back(0);  // becomes the sole tip when the clock first ticks
  return s;
}

std::vector<std::int64_t> arrivals_for_step(const MechanismConfig& config,
                                            const Assignment& a,
                                            ArrivalModel model, Rng& rng) {
  const int n = config.num_types();
  std::vector<std::int64_t> counts(n, 0);
  for (int i = 0; i < n; ++i) {
    const double mean = static_cast<double>(config.num_agents) *
                        config.types.fraction(i) *
                        transaction_rate(config.types.power(i), a.d.level(i));
    if (model == ArrivalModel::poisson) {
      std::poisson_distribution<std::int64_t> dist(mean);
      counts[i] = dist(rng);
    } else {
      counts[i] = std::llrint(mean);
    }
  }
  return counts;
}

std::size_t sample_weighted_index(std::span<const double> weights,
                                  double max_weight, Rng& rng) {
  if (weights.empty())
    throw std::logic_error("cannot sample from an empty tip set");
  if (!(max_weight > 0.0))
    throw std::logic_error("max_weight must be positive");
  std::uniform_int_distribution<std::size_t> propose(0, weights.size() - 1);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  while (true) {
    const std::size_t idx = propose(rng);
    if (unit(rng) * max_weight < weights[idx]) return idx;
  }
}

namespace {

std::pair<std::size_t, std::size_t> draw_pair(std::span<const double> weights,
                                              double max_weight, Rng& rng) {
  const std::size_t a = sample_weighted_index(weights, max_weight, rng);
  const std::size_t b = sample_weighted_index(weights, max_weight, rng);
  return {a, b};
}

}  // namespace

std::pair<TxId, TxId> select_tips(const TangleState& state, Rng& rng) {
  std::vector<double> weights(state.tips.size());
  double max_weight = 0.0;
  for (std::size_t k = 0; k < state.tips.size(); ++k) {
    weights[k] = state.transactions[state.tips[k]].weight;
    max_weight = std::max(max_weight, weights[k]);
  }
  const auto [a, b] = draw_pair(weights, max_weight, rng);
  return {state.tips[a], state.tips[b]};
}

void step(TangleState& state, const SimConfig& sim, Rng& rng) {
  state.clock += 1;
  const std::int64_t now = state.clock;

  // One-step delay: last step's arrivals become visible first.
  state.tips.insert(state.tips.end(), state.pending.begin(),
                    state.pending.end());
  state.pending.clear();

  const auto counts =
      arrivals_for_step(sim.config, sim.assignment, sim.arrival_model, rng);

  // Every arrival this step samples from the same snapshot.
  std::vector<double> weights(state.tips.size());
  double max_weight = 0.0;
  for (std::size_t k = 0; k < state.tips.size(); ++k) {
    weights[k] = state.transactions[state.tips[k]].weight;
    max_weight = std::max(max_weight, weights[k]);
  }
  std::vector<char> hit(state.tips.size(), 0);

  for (int type = 0; type < static_cast<int>(counts.size()); ++type) {
    for (std::int64_t k = 0; k < counts[type]; ++k) {
      const auto [a, b] = draw_pair(weights, max_weight, rng);
      Transaction tx;
      tx.id = static_cast<TxId>(state.transactions.size());
      tx.owner_type = type;
      tx.weight = sim.assignment.w.value(type);
      tx.created_at = now;
      tx.approves = {state.tips[a], state.tips[b]};
      state.pending.push_back(tx.id);
      state.transactions.push_back(tx);
      for (const std::size_t pos : {a, b}) {
        hit[pos] = 1;
        auto& target = state.transactions[state.tips[pos]];
        if (!target.approved_at) target.approved_at = now;
      }
    }
  }

  // Approved tips leave the tip set at the end of the step.
  std::size_t keep = 0;
  for (std::size_t k = 0; k < state.tips.size(); ++k)
    if (!hit[k]) state.tips[keep++] = state.tips[k];
  state.tips.resize(keep);
}

ApprovalStats approval_stats(const TangleState& state, int num_types) {
  if (num_types < 1) throw ValidationError("num_types must be at least 1");
  ApprovalStats stats;
  stats.per_type.resize(num_types);
  std::vector<double> waits(num_types, 0.0);
  double genesis_wait = 0.0;
  for (const auto& tx : state.transactions) {
    const bool is_genesis = tx.owner_type == kGenesisOwner;
    auto& row =
        is_genesis ? stats.genesis : stats.per_type.at(tx.owner_type);
    row.created += 1;
    if (tx.approved_at) {
      row.approved += 1;
      const auto wait = static_cast<double>(*tx.approved_at - tx.created_at);
      (is_genesis ? genesis_wait : waits[tx.owner_type]) += wait;
    } else {
      row.unapproved += 1;
    }
  }
  for (int i = 0; i < num_types; ++i)
    if (stats.per_type[i].approved > 0)
      stats.per_type[i].mean_approval_time =
          waits[i] / static_cast<double>(stats.per_type[i].approved);
  if (stats.genesis.approved > 0)
    stats.genesis.mean_approval_time =
        genesis_wait / static_cast<double>(stats.genesis.approved);
  return stats;
}

SimMetrics run(const SimConfig& sim) {
  sim.validate();
  auto state = TangleState::genesis();
  Rng rng(sim.seed);
  for (std::int64_t t = 0; t < sim.horizon; ++t) step(state, sim, rng);
  SimMetrics metrics;
  metrics.approvals = approval_stats(state, sim.config.num_types());
  metrics.final_tip_count =
      static_cast<std::int64_t>(state.tips.size() + state.pending.size());
  metrics.total_transactions =
      static_cast<std::int64_t>(state.transactions.size());
  return metrics;
}

}  // namespace tanglerate
