// Serial reference vs OpenMP kernels.

#include <benchmark/benchmark.h>

#include <vector>

#include "relaycap/af_spectrum.hpp"
#include "relaycap/kernels.hpp"
#include "relaycap/sweep.hpp"

namespace {

using namespace relaycap;

const std::vector<SnrTriple>& samples(std::size_t n) {
  static std::vector<SnrTriple> cache;
  if (cache.size() != n) cache = random_triples(SweepConfig::random(n, 42));
  return cache;
}

template <auto Fn>
void BM_batch(benchmark::State& state) {
  const auto& s = samples(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(Fn(s));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

template <auto Gain, auto Rate>
void BM_quadrature(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const std::vector<double> alloc(n, 1.0);
  for (auto _ : state) {
    const auto gain = Gain(1.3, 0.7, 0.25, n);
    benchmark::DoNotOptimize(Rate(alloc, gain));
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

}  // namespace

BENCHMARK(BM_batch<serial::evaluate>)->Name("evaluate/serial")->Arg(10000)->Arg(100000);
BENCHMARK(BM_batch<parallel::evaluate>)->Name("evaluate/openmp")->Arg(10000)->Arg(100000);
BENCHMARK(BM_batch<serial::check>)->Name("check/serial")->Arg(10000)->Arg(100000);
BENCHMARK(BM_batch<parallel::check>)->Name("check/openmp")->Arg(10000)->Arg(100000);
BENCHMARK(BM_quadrature<serial::spectrum_gain, serial::quadrature_rate>)
    ->Name("quadrature/serial")
    ->Arg(4096)
    ->Arg(1 << 20);
BENCHMARK(BM_quadrature<parallel::spectrum_gain, parallel::quadrature_rate>)
    ->Name("quadrature/openmp")
    ->Arg(4096)
    ->Arg(1 << 20);

BENCHMARK_MAIN();
