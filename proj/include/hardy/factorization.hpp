#pragma once

#include "hardy/gauge_norm.hpp"
#include "hardy/grid.hpp"

namespace hardy {

struct LogIntegrability {
  double integral = 0.0;        // quadrature of log(max(phi, floor))
  bool pass = false;            // vanishing-set gate verdict
  std::size_t vanishing_nodes = 0;  // nodes below the zero threshold
};

// Floored quadrature of log phi plus the vanishing-set gate.
LogIntegrability log_integrability(const CircleFunction& phi);

// Boundary values of the analytic function with modulus phi and positive
// mean: g = exp(L + iQL), L the floored log. Isolated boundary zeros of phi
// are divided out first and multiplied back as explicit (w - zeta)^m
// factors, which keeps |g| = phi and the one-sided spectrum accurate even
// when phi touches zero at grid nodes. Fails with a vanishing-modulus error
// when the gate rejects phi.
CircleFunction outer_from_modulus(const CircleFunction& phi);

struct MembershipReport {
  bool member = false;
  bool analytic = false;
  double negative_energy = 0.0;    // absolute l2 energy at k < 0
  double negative_fraction = 0.0;  // relative to total energy
  bool alpha_finite = false;
  double alpha_value = 0.0;
};

// Two-sided membership test: analytic up to tolerance (H1 side) and finite
// gauge norm (L^alpha side). Refuses non-continuous specs.
MembershipReport is_in_Halpha(const CircleFunction& f, const GaugeNormSpec& spec,
                              double tol_analytic = tol::kAnalyticTol);

struct FactorizationResult {
  CircleFunction unimodular;  // u (or w)
  CircleFunction outer;       // g (or h)
  double residual_reconstruction = 0.0;  // max |f - u g|
  double residual_unimodularity = 0.0;   // max ||u| - 1|
  double outer_negative_energy = 0.0;    // absolute, of the outer factor
  std::size_t guarded_nodes = 0;  // quotient nodes filled from neighbors
  bool inverse_in_class = false;  // inverse-bounded: 1/h passed membership
};

// f = u g with g = outer_from_modulus(|f|) and u = f/g unimodular.
// Requires f analytic to tolerance and |f| log-integrable.
FactorizationResult inner_outer_factorize(const CircleFunction& f);

// k = w h with h, 1/h analytic, |h| = |k|, w unimodular: h is the
// reciprocal of the outer function with modulus |1/k|. Requires bounded k
// whose reciprocal has a finite (stabilizing) gauge norm.
FactorizationResult factorize_inverse_bounded(const CircleFunction& k,
                                              const GaugeNormSpec& spec);

}  // namespace hardy
