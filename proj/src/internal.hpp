#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <vector>

#include "hardy/gauge_norm.hpp"
#include "hardy/grid.hpp"

// Shared pieces private to the library implementation.
namespace hardy::detail {

// Floored pointwise log of a modulus profile. Nodes where the modulus drops
// below the zero threshold are counted; the log is clamped at the floor so a
// single boundary zero cannot poison the quadrature.
struct FlooredLog {
  std::vector<double> logs;     // log(max(phi_j, floor))
  std::size_t vanishing = 0;    // #nodes with phi_j < zero threshold
  double mean = 0.0;            // (1/n) sum logs
};

// Throws on non-real or negative samples.
FlooredLog floored_log_profile(const CircleFunction& phi);

// Vanishing-set gate: at most a 1e-3 fraction of nodes may sit below the
// zero threshold.
bool vanishing_gate_ok(std::size_t vanishing, std::size_t n);

void require_real(const CircleFunction& u, const char* what);

// Deterministic uniform sampler. std::uniform_real_distribution is not
// pinned across standard-library versions, so map the raw 64-bit stream to
// [0,1) by hand.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}
  double uniform() { return static_cast<double>(eng_() >> 11) * 0x1.0p-53; }
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
  std::size_t index(std::size_t n) {
    return static_cast<std::size_t>(eng_() % static_cast<std::uint64_t>(n));
  }

 private:
  std::mt19937_64 eng_;
};

// Ascent engine with an explicit iteration budget; dual_norm calls it with
// the shipped cap. Exposed so tests can drive the under-budget failure path.
DualResult dual_ascent(const GaugeNormSpec& spec,
                       const std::vector<double>& magnitudes,
                       std::uint64_t iteration_cap, std::uint64_t stall_window);

// Pointwise f/g. Nodes where |g| falls below the division guard (relative
// to max |g|) are not divided; they are filled with the average of the
// nearest unguarded neighbors on both sides, which is accurate whenever the
// quotient is smooth across the guarded node.
struct GuardedQuotient {
  CircleFunction quotient;
  std::size_t guarded = 0;
};
GuardedQuotient guarded_divide(const CircleFunction& f, const CircleFunction& g);

}  // namespace hardy::detail
