#pragma once

#include <algorithm>
#include <complex>
#include <cstddef>
#include <cstdint>
#include <vector>

// Execution-mode switch plus deterministic data-parallel kernels.
//
// Every reduction uses a fixed block decomposition: per-block partial sums
// are accumulated in index order and then combined in block order, so the
// floating-point result is bitwise identical in serial and parallel mode,
// for any thread count. The serial path runs the same blocked algorithm
// without OpenMP and doubles as the reference implementation for tests and
// benchmarks.
namespace hardy {

enum class Exec { Serial, Parallel };

void set_execution(Exec mode) noexcept;
Exec execution() noexcept;

// Deterministic work counters surfaced in reports (wall-clock time is not:
// reports must be byte-stable across runs).
struct Counters {
  std::uint64_t fft_calls = 0;
  std::uint64_t norm_evaluations = 0;
  std::uint64_t ascent_iterations = 0;
  std::uint64_t subspace_projections = 0;
};

Counters counters_snapshot() noexcept;
void counters_reset() noexcept;
void count_fft() noexcept;
void count_norm_evaluation() noexcept;
void count_ascent_iterations(std::uint64_t iters) noexcept;
void count_subspace_projection() noexcept;

namespace detail {
inline constexpr std::size_t kReduceBlock = 1024;
// Loops shorter than this run serially even in parallel mode; spawning a
// thread team for a handful of iterations costs more than it saves.
inline constexpr std::size_t kMinParallelIters = 64;
bool use_parallel(std::size_t iterations) noexcept;
}  // namespace detail

#ifdef _OPENMP
#define HARDY_PRAGMA_OMP_FOR _Pragma("omp parallel for schedule(static)")
#else
#define HARDY_PRAGMA_OMP_FOR
#endif

// body(j) must only write state owned by iteration j.
template <class F>
void parallel_for(std::size_t n, F&& body) {
  if (detail::use_parallel(n)) {
    HARDY_PRAGMA_OMP_FOR
    for (long long j = 0; j < static_cast<long long>(n); ++j) {
      body(static_cast<std::size_t>(j));
    }
  } else {
    for (std::size_t j = 0; j < n; ++j) body(j);
  }
}

// Blocked reduction of term(j) over j in [0, n). T must be value-initialized
// to the additive identity (double, std::complex<double>).
template <class T, class F>
T blocked_reduce(std::size_t n, F&& term) {
  const std::size_t nb = (n + detail::kReduceBlock - 1) / detail::kReduceBlock;
  if (nb <= 1) {
    T acc{};
    for (std::size_t j = 0; j < n; ++j) acc += term(j);
    return acc;
  }
  std::vector<T> partial(nb);
  parallel_for(nb, [&](std::size_t b) {
    const std::size_t lo = b * detail::kReduceBlock;
    const std::size_t hi = std::min(n, lo + detail::kReduceBlock);
    T acc{};
    for (std::size_t j = lo; j < hi; ++j) acc += term(j);
    partial[b] = acc;
  });
  T total{};
  for (std::size_t b = 0; b < nb; ++b) total += partial[b];
  return total;
}

double blocked_sum(const double* x, std::size_t n);
std::complex<double> blocked_sum(const std::complex<double>* x, std::size_t n);
double blocked_max_abs(const double* x, std::size_t n);

}  // namespace hardy
