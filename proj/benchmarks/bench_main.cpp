#include <benchmark/benchmark.h>

#include "tanglerate/inner_solver.hpp"
#include "tanglerate/outer_search.hpp"
#include "tanglerate/tangle_sim.hpp"

namespace {

using namespace tanglerate;

MechanismConfig reference_config(std::int64_t num_agents) {
  const double third = 1.0 / 3;
  MechanismConfig cfg;
  cfg.types.entries = {{1.0, third}, {3.0, third}, {10.0, 1.0 - 2 * third}};
  cfg.max_difficulty = 12;
  cfg.alpha = 0.1;
  cfg.beta = 80.0;
  cfg.u0 = 10.0;
  cfg.num_agents = num_agents;
  return cfg;
}

void BM_SolveMechanismPruned(benchmark::State& state) {
  const MechanismConfig cfg = reference_config(state.range(0));
  for (auto _ : state)
    benchmark::DoNotOptimize(solve_mechanism(cfg, SearchMode::pruned));
}
BENCHMARK(BM_SolveMechanismPruned)->Arg(100)->Arg(100000);

void BM_SolveMechanismExhaustive(benchmark::State& state) {
  const MechanismConfig cfg = reference_config(100);
  for (auto _ : state)
    benchmark::DoNotOptimize(solve_mechanism(cfg, SearchMode::exhaustive));
}
BENCHMARK(BM_SolveMechanismExhaustive);

void BM_SolveWeights(benchmark::State& state) {
  const MechanismConfig cfg = reference_config(100);
  const DifficultyVector d{{4, 6, 8}};
  for (auto _ : state) benchmark::DoNotOptimize(solve_weights(cfg, d));
}
BENCHMARK(BM_SolveWeights);

void BM_EnumerateMonotone(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_monotone(3, 12));
}
BENCHMARK(BM_EnumerateMonotone);

void BM_SimulationStep(benchmark::State& state) {
  SimConfig sim;
  sim.config = reference_config(100);
  sim.assignment = solve_mechanism(sim.config).assignment;
  sim.horizon = 2000;
  TangleState tangle = TangleState::genesis();
  Rng rng(sim.seed);
  for (auto _ : state) step(tangle, sim, rng);
  state.SetItemsProcessed(state.iterations());
}
BENCHMARK(BM_SimulationStep);

void BM_FullRun(benchmark::State& state) {
  SimConfig sim;
  sim.config = reference_config(100);
  sim.assignment = solve_mechanism(sim.config).assignment;
  sim.horizon = state.range(0);
  for (auto _ : state) benchmark::DoNotOptimize(run(sim));
}
BENCHMARK(BM_FullRun)->Arg(500)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
