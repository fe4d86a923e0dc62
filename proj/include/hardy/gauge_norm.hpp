#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hardy/grid.hpp"
#include "hardy/tolerances.hpp"

namespace hardy {

// Tabulated convex Young function: piecewise linear through (0,0) and the
// given knots, extended with the final slope beyond the last knot (which
// keeps it convex). Construction validates Phi(0-limit) = 0, monotonicity
// and convexity of the table.
class YoungTable {
 public:
  YoungTable(std::vector<double> x, std::vector<double> phi);

  double operator()(double t) const;
  double right_slope(double t) const;
  const std::vector<double>& knots() const noexcept { return x_; }
  const std::vector<double>& values() const noexcept { return phi_; }
  // Inverse of the (strictly increasing past the first positive value)
  // piecewise-linear function; used for indicator norms.
  double inverse(double y) const;

  // x log(1+x) sampled on a fixed geometric grid.
  static YoungTable default_table();

 private:
  std::vector<double> x_, phi_;
};

// Declarative description of a normalized gauge norm. Evaluation divides
// the raw functional by the raw functional of the constant 1 on the same
// grid, which makes alpha(1) == 1 exact at every resolution. The
// *_with_constant constructors store an explicit normalization instead
// (diagnostic use: a wrong constant makes the normalization axiom fail).
class GaugeNormSpec {
 public:
  enum class Variant { Lp, WeightedLpMix, Lorentz, Orlicz, LInfinity };

  static GaugeNormSpec lp(double p);
  static GaugeNormSpec weighted_lp_mix(std::vector<double> weights,
                                       std::vector<double> exponents);
  static GaugeNormSpec lorentz(double p, double q);
  static GaugeNormSpec lorentz_with_constant(double p, double q, double constant);
  // Runs the randomized axiom gate (500 trials) and rejects failing tables.
  static GaugeNormSpec orlicz(YoungTable table);
  static GaugeNormSpec orlicz_with_constant(YoungTable table, double constant);
  static GaugeNormSpec linfinity();

  Variant variant() const noexcept { return variant_; }
  bool continuous() const noexcept { return variant_ != Variant::LInfinity; }
  double p() const noexcept { return p_; }
  double q() const noexcept { return q_; }
  const std::vector<double>& weights() const noexcept { return weights_; }
  const std::vector<double>& exponents() const noexcept { return exponents_; }
  const YoungTable& young() const;
  const std::optional<double>& normalization_override() const noexcept {
    return constant_;
  }

  // Raw (unnormalized) gauge functional of a magnitude vector under node
  // weight 1/n.
  double raw(const std::vector<double>& magnitudes) const;
  double raw_of_ones(std::size_t n) const;

  std::string describe() const;

 private:
  GaugeNormSpec() = default;
  Variant variant_ = Variant::Lp;
  double p_ = 2.0, q_ = 1.0;
  std::vector<double> weights_, exponents_;
  std::shared_ptr<const YoungTable> young_;
  std::optional<double> constant_;
};

double evaluate(const GaugeNormSpec& spec, const CircleFunction& f);
double evaluate_magnitudes(const GaugeNormSpec& spec,
                           const std::vector<double>& magnitudes);

// norm of the indicator of any set of k nodes out of n (rearrangement
// invariance makes it a function of the measure k/n alone).
double indicator_norm(const GaugeNormSpec& spec, std::size_t k, std::size_t n);

struct AxiomCheck {
  std::string name;
  bool passed = true;
  double worst = 0.0;      // largest violation observed (0 when clean)
  std::string witness;     // description of the worst offending trial
};

struct ValidationReport {
  bool passed = false;
  std::vector<AxiomCheck> checks;
};

// Randomized axiom suite on simple functions: normalization (exact), gauge
// property (exact), L1-domination, monotonicity, multiplicative bound
// alpha(fg) <= alpha(f) sup|g|, sup bound alpha(g) <= sup|g|, triangle
// inequality and absolute homogeneity.
ValidationReport validate_axioms(const GaugeNormSpec& spec, int trials,
                                 std::uint64_t seed,
                                 std::size_t grid_n = tol::kDefaultGridSize);

// Same suite against an arbitrary magnitude-vector evaluator (used to check
// that a computed dual norm is itself a normalized gauge norm).
using NormEvaluator = std::function<double(const std::vector<double>&)>;
ValidationReport validate_axioms_evaluator(const NormEvaluator& alpha,
                                           std::size_t grid_n, int trials,
                                           std::uint64_t seed);

// alpha(chi_E) for arcs E of the given measures (each must be j/n).
std::vector<std::pair<double, double>> continuity_modulus(
    const GaugeNormSpec& spec, const Grid& g, const std::vector<double>& measures);

struct ExtendResult {
  double value = 0.0;      // last truncation value (the monotone limit if stabilized)
  bool stabilized = false; // false reports the +infinity marker
  std::vector<std::pair<double, double>> trajectory;  // (cap, value) pairs
};

// sup over truncations alpha(min(|f|, c)) for c increasing up to cap.
// Non-finite samples are treated as overflow markers (truncated to c).
ExtendResult extend_to_measurable(const GaugeNormSpec& spec,
                                  const CircleFunction& f,
                                  double cap = tol::kDefaultExtendCap);

enum class DualMethod { ClosedForm, Ascent, BruteSmall };

struct DualResult {
  double value = 0.0;
  std::uint64_t iterations = 0;
  DualMethod method = DualMethod::Ascent;
};

// alpha'(f) = sup { integral |f h| dm : alpha(h) <= 1 }.
//  ClosedForm: Lp <-> Lq Hoelder conjugates (and L-infinity <-> L1).
//  Ascent: aligned level-set scan over scaled indicators of the top-k
//    magnitude sets, refined by multiplicative-weights updates with
//    tie-averaged subgradients; the running best value is the answer.
//  BruteSmall: dense simplex search with local refinement, grids <= 16.
DualResult dual_norm(const GaugeNormSpec& spec, const CircleFunction& f,
                     DualMethod method);

// Quadrature of integral f h dm (plain product, no conjugation).
cplx pairing(const CircleFunction& f, const CircleFunction& h);

// The norm family every cross-norm criterion runs over.
std::vector<std::pair<std::string, GaugeNormSpec>> shipped_continuous_specs();

}  // namespace hardy
