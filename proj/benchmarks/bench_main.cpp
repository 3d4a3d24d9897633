#include <benchmark/benchmark.h>

#include <vector>

#include "spinring/eigensolver.hpp"
#include "spinring/entanglement.hpp"
#include "spinring/ring_models.hpp"
#include "spinring/trial_states.hpp"

namespace {

using namespace spinring;

RingConfig model_b(int n) {
  RingConfig cfg;
  cfg.sites = n;
  cfg.model = ModelVariant::ising(Family::B, IsingAxis::X, 1.0);
  return cfg;
}

void BM_BuildHamiltonian(benchmark::State& state) {
  const auto cfg = model_b(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(build_hamiltonian(cfg));
}
BENCHMARK(BM_BuildHamiltonian)->Arg(6)->Arg(8)->Arg(10)->Unit(benchmark::kMillisecond);

void BM_Diagonalize(benchmark::State& state) {
  const auto h = build_hamiltonian(model_b(static_cast<int>(state.range(0))));
  DiagonalizeOptions opts;
  opts.vectors = state.range(1) != 0;
  for (auto _ : state) benchmark::DoNotOptimize(diagonalize(h, opts));
}
BENCHMARK(BM_Diagonalize)->Args({8, 0})->Args({8, 1})->Args({10, 0})->Args({10, 1})->Unit(benchmark::kMillisecond);

void BM_PartialTrace(benchmark::State& state) {
  const HilbertSpace space(10, SpinMagnitude::half());
  const auto psi = ghz_trial(Character::AF, kPi / 2, space);
  std::vector<int> keep;
  for (int k = 1; k <= state.range(0); ++k) keep.push_back(k);
  for (auto _ : state) benchmark::DoNotOptimize(partial_trace(psi, keep));
}
BENCHMARK(BM_PartialTrace)->Arg(1)->Arg(2)->Arg(5);

void BM_MaximizeTheta(benchmark::State& state) {
  auto cfg = model_b(8);
  cfg.field = {FieldDirection::Z, 0.2, 0.0};
  const auto g = ground_space(diagonalize(build_hamiltonian(cfg)));
  for (auto _ : state) benchmark::DoNotOptimize(maximize_theta(g, Character::AF, kPi / 2, g.space));
}
BENCHMARK(BM_MaximizeTheta)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
