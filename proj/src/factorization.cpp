#include "hardy/factorization.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "hardy/parallel.hpp"
#include "hardy/spectral.hpp"
#include "internal.hpp"

namespace hardy {

LogIntegrability log_integrability(const CircleFunction& phi) {
  const detail::FlooredLog prof = detail::floored_log_profile(phi);
  LogIntegrability out;
  out.integral = prof.mean;
  out.vanishing_nodes = prof.vanishing;
  out.pass = detail::vanishing_gate_ok(prof.vanishing, phi.size());
  return out;
}

namespace {

struct BoundaryZero {
  std::size_t node = 0;
  int multiplicity = 1;
};

// Multiplicity from the growth rate of phi away from the zero: if
// phi ~ c|theta - theta_0|^m then phi(2h)/phi(h) ~ 2^m. Both sides are
// averaged; unusable neighbors (inside the vanishing set themselves) fall
// back to the other side, or to multiplicity 1.
int estimate_multiplicity(const std::vector<double>& mags, std::size_t j0) {
  const std::size_t n = mags.size();
  const auto at = [&](long off) {
    long idx = (static_cast<long>(j0) + off) % static_cast<long>(n);
    if (idx < 0) idx += static_cast<long>(n);
    return mags[static_cast<std::size_t>(idx)];
  };
  double acc = 0.0;
  int sides = 0;
  for (long dir : {+1L, -1L}) {
    const double near = at(dir), far = at(2 * dir);
    if (near > tol::kZeroThreshold && far > tol::kZeroThreshold) {
      acc += std::log2(far / near);
      ++sides;
    }
  }
  if (sides == 0) return 1;
  const int m = static_cast<int>(std::lround(acc / sides));
  return std::min(8, std::max(1, m));
}

}  // namespace

CircleFunction outer_from_modulus(const CircleFunction& phi) {
  const std::size_t n = phi.size();
  const Grid g = phi.grid();
  const detail::FlooredLog prof = detail::floored_log_profile(phi);
  if (!detail::vanishing_gate_ok(prof.vanishing, n)) {
    fail(ErrorCode::VanishingModulus,
         "modulus vanishes on too large a set (" + std::to_string(prof.vanishing) +
             " of " + std::to_string(n) + " nodes) to admit an analytic factor");
  }

  std::vector<double> mags(n);
  for (std::size_t j = 0; j < n; ++j) mags[j] = phi.samples()[j].real();

  // Collect the isolated boundary zeros so they can be handled as explicit
  // polynomial factors; running the log construction straight through a
  // floored zero smears spectral mass to negative frequencies.
  std::vector<BoundaryZero> zeros;
  for (std::size_t j = 0; j < n; ++j) {
    if (mags[j] < tol::kZeroThreshold) {
      zeros.push_back({j, estimate_multiplicity(mags, j)});
    }
  }

  // Deflated modulus: phi with the zero factors |w - zeta|^m divided out.
  std::vector<double> deflated = mags;
  if (!zeros.empty()) {
    parallel_for(n, [&](std::size_t j) {
      double factor = 1.0;
      for (const BoundaryZero& z : zeros) {
        const double d = std::abs(g.node(j) - g.node(z.node));
        factor *= std::pow(d, static_cast<double>(z.multiplicity));
      }
      if (mags[j] >= tol::kZeroThreshold && factor > 0.0) {
        deflated[j] = mags[j] / factor;
      }
    });
    // The deflated profile is smooth and positive across each zero; fill
    // the zero nodes from their neighbors.
    for (const BoundaryZero& z : zeros) {
      std::size_t left = (z.node + n - 1) % n, right = (z.node + 1) % n;
      while (mags[left] < tol::kZeroThreshold) left = (left + n - 1) % n;
      while (mags[right] < tol::kZeroThreshold) right = (right + 1) % n;
      deflated[z.node] = 0.5 * (deflated[left] + deflated[right]);
    }
  }

  std::vector<cplx> log_samples(n);
  for (std::size_t j = 0; j < n; ++j) {
    log_samples[j] = cplx{std::log(std::max(deflated[j], tol::kLogFloor)), 0.0};
  }
  const CircleFunction L = CircleFunction::from_samples(g, std::move(log_samples));
  const CircleFunction QL = conjugate_function(L);

  std::vector<cplx> out(n);
  parallel_for(n, [&](std::size_t j) {
    const cplx e = std::exp(cplx{L[j].real(), QL[j].real()});
    cplx poly{1.0, 0.0};
    for (const BoundaryZero& z : zeros) {
      const cplx lin = g.node(j) - g.node(z.node);
      for (int t = 0; t < z.multiplicity; ++t) poly *= lin;
    }
    out[j] = e * poly;
  });
  CircleFunction raw = CircleFunction::from_samples(g, std::move(out));

  // Rotate by a unimodular constant so the mean (= the value at the disk
  // center) is a positive real, matching the log-mean normalization.
  const cplx c0 = raw.coefficient(0);
  if (std::abs(c0) > 1e-300) {
    const cplx rot = std::conj(c0) / std::abs(c0);
    std::vector<cplx> rotated(n);
    parallel_for(n, [&](std::size_t j) { rotated[j] = rot * raw[j]; });
    return CircleFunction::from_samples(g, std::move(rotated));
  }
  return raw;
}

MembershipReport is_in_Halpha(const CircleFunction& f, const GaugeNormSpec& spec,
                              double tol_analytic) {
  if (!spec.continuous()) {
    fail(ErrorCode::UnsupportedNorm,
         "membership requires a continuous norm description");
  }
  MembershipReport out;
  out.negative_energy = negative_energy(f);
  out.negative_fraction = negative_energy_fraction(f);
  out.analytic = out.negative_fraction <= tol_analytic;
  const ExtendResult ext = extend_to_measurable(spec, f);
  out.alpha_finite = ext.stabilized;
  out.alpha_value = ext.value;
  out.member = out.analytic && out.alpha_finite;
  return out;
}

namespace detail {

GuardedQuotient guarded_divide(const CircleFunction& f, const CircleFunction& g) {
  require_same_grid(f, g);
  const std::size_t n = f.size();
  double gmax = 0.0;
  for (std::size_t j = 0; j < n; ++j) gmax = std::max(gmax, std::abs(g[j]));
  if (gmax == 0.0) {
    fail(ErrorCode::VanishingModulus, "division by the zero function");
  }
  const double guard = tol::kDivisionGuard * gmax;
  std::vector<bool> guarded(n, false);
  std::vector<cplx> q(n, cplx{0.0, 0.0});
  std::size_t count = 0;
  for (std::size_t j = 0; j < n; ++j) {
    if (std::abs(g[j]) < guard) {
      guarded[j] = true;
      ++count;
    } else {
      q[j] = f[j] / g[j];
    }
  }
  if (count == n) {
    fail(ErrorCode::VanishingModulus, "denominator below the division guard everywhere");
  }
  for (std::size_t j = 0; j < n; ++j) {
    if (!guarded[j]) continue;
    std::size_t left = (j + n - 1) % n, right = (j + 1) % n;
    while (guarded[left]) left = (left + n - 1) % n;
    while (guarded[right]) right = (right + 1) % n;
    q[j] = 0.5 * (q[left] + q[right]);
  }
  GuardedQuotient out{CircleFunction::from_samples(f.grid(), std::move(q)), count};
  return out;
}

}  // namespace detail

FactorizationResult inner_outer_factorize(const CircleFunction& f) {
  if (!f.has_finite_samples()) {
    fail(ErrorCode::NumericInput, "factorization needs finite samples");
  }
  const double neg_frac = negative_energy_fraction(f);
  if (neg_frac > tol::kAnalyticTol) {
    fail(ErrorCode::NotHardy,
         "input is not analytic to tolerance (negative-frequency fraction " +
             std::to_string(neg_frac) + ")");
  }
  const CircleFunction modulus = modulus_of(f);
  const CircleFunction g = outer_from_modulus(modulus);
  detail::GuardedQuotient q = detail::guarded_divide(f, g);

  FactorizationResult out;
  out.unimodular = q.quotient;
  out.outer = g;
  out.guarded_nodes = q.guarded;
  const std::size_t n = f.size();
  double recon = 0.0, unim = 0.0;
  for (std::size_t j = 0; j < n; ++j) {
    recon = std::max(recon, std::abs(f[j] - q.quotient[j] * g[j]));
    unim = std::max(unim, std::abs(std::abs(q.quotient[j]) - 1.0));
  }
  out.residual_reconstruction = recon;
  out.residual_unimodularity = unim;
  out.outer_negative_energy = negative_energy(g);
  return out;
}

FactorizationResult factorize_inverse_bounded(const CircleFunction& k,
                                              const GaugeNormSpec& spec) {
  if (!k.has_finite_samples()) {
    fail(ErrorCode::NumericInput, "factorization needs finite samples");
  }
  if (!spec.continuous()) {
    fail(ErrorCode::UnsupportedNorm,
         "inverse-bounded factorization requires a continuous norm description");
  }
  const std::size_t n = k.size();
  const Grid grid = k.grid();

  // Reciprocal modulus, with overflow markers where k vanishes on the grid.
  std::vector<cplx> recip(n);
  for (std::size_t j = 0; j < n; ++j) {
    const double m = std::abs(k[j]);
    recip[j] = cplx{m > 0.0 ? 1.0 / m : std::numeric_limits<double>::infinity(), 0.0};
  }
  const CircleFunction recip_mod = CircleFunction::from_samples(grid, std::move(recip));

  const ExtendResult ext = extend_to_measurable(spec, recip_mod);
  if (!ext.stabilized) {
    fail(ErrorCode::InverseUnbounded,
         "the reciprocal modulus has no finite norm under " + spec.describe());
  }
  if (!recip_mod.has_finite_samples()) {
    fail(ErrorCode::InverseUnbounded,
         "the reciprocal modulus is unbounded on the grid");
  }

  // h = 1/G where G is the analytic factor with |G| = 1/|k|; then |h| = |k|
  // and both h and 1/h are analytic.
  const CircleFunction G = outer_from_modulus(recip_mod);
  detail::GuardedQuotient hq =
      detail::guarded_divide(constant_function(grid, cplx{1.0, 0.0}), G);
  const CircleFunction& h = hq.quotient;

  std::vector<cplx> w(n);
  parallel_for(n, [&](std::size_t j) { w[j] = k[j] * G[j]; });
  const CircleFunction unimod = CircleFunction::from_samples(grid, std::move(w));

  FactorizationResult out;
  out.unimodular = unimod;
  out.outer = h;
  out.guarded_nodes = hq.guarded;
  double recon = 0.0, unim = 0.0;
  for (std::size_t j = 0; j < n; ++j) {
    recon = std::max(recon, std::abs(k[j] - unimod[j] * h[j]));
    unim = std::max(unim, std::abs(std::abs(unimod[j]) - 1.0));
  }
  out.residual_reconstruction = recon;
  out.residual_unimodularity = unim;
  out.outer_negative_energy = negative_energy(h);
  const MembershipReport inv = is_in_Halpha(G, spec);
  out.inverse_in_class = inv.member;
  return out;
}

}  // namespace hardy
