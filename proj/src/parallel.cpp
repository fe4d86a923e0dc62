#include "hardy/parallel.hpp"

#include <atomic>
#include <cmath>

namespace hardy {

namespace {

std::atomic<Exec> g_exec{Exec::Parallel};

std::atomic<std::uint64_t> g_fft_calls{0};
std::atomic<std::uint64_t> g_norm_evaluations{0};
std::atomic<std::uint64_t> g_ascent_iterations{0};
std::atomic<std::uint64_t> g_subspace_projections{0};

}  // namespace

void set_execution(Exec mode) noexcept { g_exec.store(mode, std::memory_order_relaxed); }

Exec execution() noexcept { return g_exec.load(std::memory_order_relaxed); }

namespace detail {
bool use_parallel(std::size_t iterations) noexcept {
#ifdef _OPENMP
  return execution() == Exec::Parallel && iterations >= kMinParallelIters;
#else
  (void)iterations;
  return false;
#endif
}
}  // namespace detail

Counters counters_snapshot() noexcept {
  Counters c;
  c.fft_calls = g_fft_calls.load(std::memory_order_relaxed);
  c.norm_evaluations = g_norm_evaluations.load(std::memory_order_relaxed);
  c.ascent_iterations = g_ascent_iterations.load(std::memory_order_relaxed);
  c.subspace_projections = g_subspace_projections.load(std::memory_order_relaxed);
  return c;
}

void counters_reset() noexcept {
  g_fft_calls.store(0, std::memory_order_relaxed);
  g_norm_evaluations.store(0, std::memory_order_relaxed);
  g_ascent_iterations.store(0, std::memory_order_relaxed);
  g_subspace_projections.store(0, std::memory_order_relaxed);
}

void count_fft() noexcept { g_fft_calls.fetch_add(1, std::memory_order_relaxed); }
void count_norm_evaluation() noexcept { g_norm_evaluations.fetch_add(1, std::memory_order_relaxed); }
void count_ascent_iterations(std::uint64_t iters) noexcept {
  g_ascent_iterations.fetch_add(iters, std::memory_order_relaxed);
}
void count_subspace_projection() noexcept {
  g_subspace_projections.fetch_add(1, std::memory_order_relaxed);
}

double blocked_sum(const double* x, std::size_t n) {
  return blocked_reduce<double>(n, [x](std::size_t j) { return x[j]; });
}

std::complex<double> blocked_sum(const std::complex<double>* x, std::size_t n) {
  return blocked_reduce<std::complex<double>>(n, [x](std::size_t j) { return x[j]; });
}

double blocked_max_abs(const double* x, std::size_t n) {
  const std::size_t nb = (n + detail::kReduceBlock - 1) / detail::kReduceBlock;
  if (nb == 0) return 0.0;
  std::vector<double> partial(nb, 0.0);
  parallel_for(nb, [&](std::size_t b) {
    const std::size_t lo = b * detail::kReduceBlock;
    const std::size_t hi = std::min(n, lo + detail::kReduceBlock);
    double m = 0.0;
    for (std::size_t j = lo; j < hi; ++j) m = std::max(m, std::abs(x[j]));
    partial[b] = m;
  });
  double m = 0.0;
  for (std::size_t b = 0; b < nb; ++b) m = std::max(m, partial[b]);
  return m;
}

}  // namespace hardy
