#include <benchmark/benchmark.h>

#include <cmath>
#include <complex>
#include <vector>

#include "hardy/factorization.hpp"
#include "hardy/grid.hpp"
#include "hardy/parallel.hpp"
#include "hardy/spectral.hpp"

// Serial vs parallel timings for the three kernels that dominate runtime.
// Arg 0 is the grid size, arg 1 selects the execution mode (0 serial,
// 1 parallel); the outputs are bitwise identical between modes, so the
// comparison is purely about speed.

namespace {

using hardy::cplx;

void set_mode(std::int64_t flag) {
  hardy::set_execution(flag ? hardy::Exec::Parallel : hardy::Exec::Serial);
}

void BM_BlockedSum(benchmark::State& state) {
  set_mode(state.range(1));
  const std::size_t n = static_cast<std::size_t>(state.range(0));
  std::vector<double> x(n);
  for (std::size_t j = 0; j < n; ++j) x[j] = std::cos(0.1 * j);
  for (auto _ : state) {
    benchmark::DoNotOptimize(hardy::blocked_sum(x.data(), n));
  }
  state.SetItemsProcessed(state.iterations() * n);
}

void BM_Dft(benchmark::State& state) {
  set_mode(state.range(1));
  const std::size_t n = static_cast<std::size_t>(state.range(0));
  std::vector<cplx> s(n);
  for (std::size_t j = 0; j < n; ++j) {
    s[j] = cplx{std::cos(0.3 * j), std::sin(0.2 * j)};
  }
  for (auto _ : state) {
    benchmark::DoNotOptimize(hardy::dft_forward(s));
  }
  state.SetItemsProcessed(state.iterations() * n);
}

void BM_OuterPipeline(benchmark::State& state) {
  set_mode(state.range(1));
  const hardy::Grid g = hardy::Grid::make(static_cast<std::size_t>(state.range(0)));
  std::vector<cplx> s(g.n);
  for (std::size_t j = 0; j < g.n; ++j) {
    s[j] = cplx{std::exp(std::cos(g.theta(j))), 0.0};
  }
  const hardy::CircleFunction phi =
      hardy::CircleFunction::from_samples(g, std::move(s));
  for (auto _ : state) {
    benchmark::DoNotOptimize(hardy::outer_from_modulus(phi));
  }
  state.SetItemsProcessed(state.iterations() * g.n);
}

}  // namespace

BENCHMARK(BM_BlockedSum)
    ->ArgNames({"n", "par"})
    ->Args({1 << 16, 0})
    ->Args({1 << 16, 1})
    ->Args({1 << 20, 0})
    ->Args({1 << 20, 1});

BENCHMARK(BM_Dft)
    ->ArgNames({"n", "par"})
    ->Args({4096, 0})
    ->Args({4096, 1})
    ->Args({65536, 0})
    ->Args({65536, 1});

BENCHMARK(BM_OuterPipeline)
    ->ArgNames({"n", "par"})
    ->Args({4096, 0})
    ->Args({4096, 1})
    ->Args({65536, 0})
    ->Args({65536, 1});

BENCHMARK_MAIN();
