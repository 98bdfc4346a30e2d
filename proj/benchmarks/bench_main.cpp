#include <benchmark/benchmark.h>

#include "infodyn/eca.hpp"
#include "infodyn/measures.hpp"
#include "infodyn/rbn.hpp"
#include "infodyn/rng.hpp"

namespace {

using namespace infodyn;

BitState random_state(std::size_t n, std::uint64_t seed) {
  Rng rng(seed);
  BitState s(n);
  for (std::size_t i = 0; i < n; ++i) s.set(i, rng.coin());
  return s;
}

void BM_EcaStep(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const EcaRule rule = rule_table(110);
  BitState s = random_state(n, 1);
  for (auto _ : state) {
    s = eca_step(s, rule);
    benchmark::DoNotOptimize(s);
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_EcaStep)->Arg(256)->Arg(4096)->Arg(1 << 16);

void BM_EcaStepNaive(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const EcaRule rule = rule_table(110);
  BitState s = random_state(n, 1);
  for (auto _ : state) {
    s = eca_step_naive(s, rule);
    benchmark::DoNotOptimize(s);
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_EcaStepNaive)->Arg(256)->Arg(4096);

void BM_RbnStep(benchmark::State& state) {
  RbnConfig config;
  config.n = static_cast<std::size_t>(state.range(0));
  config.k = 2.5;
  config.seed = 3;
  BooleanNetwork net = generate_rbn(config);
  for (auto _ : state) {
    net.step();
    benchmark::DoNotOptimize(net.state());
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_RbnStep)->Arg(100)->Arg(1000);

void BM_ShannonInformation(benchmark::State& state) {
  const int b = static_cast<int>(state.range(0));
  Rng rng(5);
  std::vector<Symbol> bits(1 << 16);
  for (auto& x : bits) x = rng.coin() ? 1 : 0;
  const SymbolSequence seq = rescale(SymbolSequence(std::move(bits), 1), b);
  for (auto _ : state) benchmark::DoNotOptimize(shannon_information(seq));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(seq.size()));
}
BENCHMARK(BM_ShannonInformation)->Arg(1)->Arg(8)->Arg(24);

void BM_NetworkMeasures(benchmark::State& state) {
  RbnConfig config;
  config.k = 2.5;
  config.transient = 0;
  config.window = 1000;
  config.seed = 9;
  const Trajectory traj = run_rbn(config);
  const int b = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(network_measures(traj, b));
}
BENCHMARK(BM_NetworkMeasures)->Arg(1)->Arg(8);

}  // namespace

BENCHMARK_MAIN();
