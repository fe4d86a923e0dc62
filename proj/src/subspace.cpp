#include "hardy/subspace.hpp"

#include <Eigen/Dense>
#include <cmath>
#include <string>

#include "hardy/parallel.hpp"
#include "hardy/spectral.hpp"
#include "internal.hpp"

namespace hardy {

namespace {

double window_norm(const std::vector<cplx>& v) {
  double acc = 0.0;
  for (const cplx& x : v) acc += std::norm(x);
  return std::sqrt(acc);
}

cplx window_dot(const std::vector<cplx>& a, const std::vector<cplx>& b) {
  cplx acc{0.0, 0.0};
  for (std::size_t t = 0; t < a.size(); ++t) acc += std::conj(a[t]) * b[t];
  return acc;
}

// Window vector of the coefficients of z^shift * f, entries t = k + m_trunc
// for k in [-m_trunc, m_trunc].
std::vector<cplx> shifted_window(const CircleFunction& f, long shift,
                                 std::size_t m_trunc) {
  const std::size_t n = f.size();
  const long half = static_cast<long>(n) / 2;
  const std::vector<cplx>& c = f.spectrum();
  std::vector<cplx> v(2 * m_trunc + 1, cplx{0.0, 0.0});
  for (long k = -static_cast<long>(m_trunc); k <= static_cast<long>(m_trunc); ++k) {
    const long kk = k - shift;
    if (kk > -half && kk <= half) {
      v[static_cast<std::size_t>(k + static_cast<long>(m_trunc))] =
          c[slot_of(kk, n)];
    }
  }
  return v;
}

CircleFunction conj_samples(const CircleFunction& f) {
  const std::size_t n = f.size();
  std::vector<cplx> s(n);
  const std::vector<cplx>& in = f.samples();
  parallel_for(n, [&](std::size_t j) { s[j] = std::conj(in[j]); });
  return CircleFunction::from_samples(f.grid(), std::move(s));
}

}  // namespace

SubspaceModel build_cyclic_subspace(const std::vector<CircleFunction>& generators,
                                    std::size_t n_basis, std::size_t m_trunc) {
  if (generators.empty()) {
    fail(ErrorCode::ShapeMismatch, "need at least one generator");
  }
  const Grid grid = generators[0].grid();
  const std::size_t n = grid.n;
  if (2 * m_trunc + 1 > n) {
    fail(ErrorCode::Resolution, "truncation window exceeds the grid");
  }
  for (const CircleFunction& f : generators) {
    require_same_grid(f, generators[0]);
    if (!f.has_finite_samples()) {
      fail(ErrorCode::NumericInput, "generator has non-finite samples");
    }
    if (l2_norm(f) < tol::kGeneratorFloor) {
      fail(ErrorCode::DegenerateGenerator, "generator is numerically zero");
    }
  }

  SubspaceModel model;
  model.grid_n = n;
  model.n_basis = n_basis;
  model.m_trunc = m_trunc;
  model.window = 2 * m_trunc + 1;

  std::vector<std::vector<cplx>> qs;
  std::vector<std::vector<cplx>> r_columns;  // coefficients of accepted columns
  std::vector<double> r_diagonals;

  for (const CircleFunction& f : generators) {
    const std::vector<cplx>& c = f.spectrum();
    double total_energy = 0.0;
    for (const cplx& x : c) total_energy += std::norm(x);

    for (std::size_t i = 0; i <= n_basis; ++i) {
      std::vector<cplx> v = shifted_window(f, static_cast<long>(i), m_trunc);
      const double norm0 = window_norm(v);
      if (total_energy > 0.0) {
        const double in_window = norm0 * norm0;
        model.truncation_loss = std::max(
            model.truncation_loss, std::max(0.0, 1.0 - in_window / total_energy));
      }
      if (norm0 <= tol::kWindowFloor * std::sqrt(total_energy)) {
        ++model.dropped;
        continue;
      }
      std::vector<cplx> coeffs(qs.size(), cplx{0.0, 0.0});
      for (int pass = 0; pass < 2; ++pass) {
        for (std::size_t b = 0; b < qs.size(); ++b) {
          const cplx h = window_dot(qs[b], v);
          coeffs[b] += h;
          for (std::size_t t = 0; t < v.size(); ++t) v[t] -= h * qs[b][t];
        }
      }
      const double rem = window_norm(v);
      if (rem < tol::kDropTol * norm0) {
        ++model.dropped;
        continue;
      }
      const double inv = 1.0 / rem;
      for (cplx& x : v) x *= inv;
      qs.push_back(std::move(v));
      r_columns.push_back(std::move(coeffs));
      r_diagonals.push_back(rem);
    }
  }

  if (!qs.empty()) {
    const std::size_t r = qs.size();
    Eigen::MatrixXcd R = Eigen::MatrixXcd::Zero(r, r);
    for (std::size_t j = 0; j < r; ++j) {
      for (std::size_t i = 0; i < r_columns[j].size(); ++i) {
        R(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) =
            r_columns[j][i];
      }
      R(static_cast<Eigen::Index>(j), static_cast<Eigen::Index>(j)) = r_diagonals[j];
    }
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(R);
    model.conditioning = svd.singularValues().minCoeff();
  }
  model.basis = std::move(qs);
  return model;
}

SubspaceModel build_cyclic_subspace(const CircleFunction& f, std::size_t n_basis,
                                    std::size_t m_trunc) {
  return build_cyclic_subspace(std::vector<CircleFunction>{f}, n_basis, m_trunc);
}

double distance_to_subspace(const CircleFunction& g, const SubspaceModel& model) {
  if (g.size() != model.grid_n) {
    fail(ErrorCode::ShapeMismatch, "function and model live on different grids");
  }
  count_subspace_projection();
  std::vector<cplx> r = shifted_window(g, 0, model.m_trunc);
  for (int pass = 0; pass < 2; ++pass) {
    for (const std::vector<cplx>& q : model.basis) {
      const cplx h = window_dot(q, r);
      for (std::size_t t = 0; t < r.size(); ++t) r[t] -= h * q[t];
    }
  }
  return window_norm(r);
}

Classification classify(const CircleFunction& f, const GaugeNormSpec& spec,
                        const ClassifyParams& params) {
  if (!spec.continuous()) {
    fail(ErrorCode::UnsupportedNorm,
         "classification requires a continuous norm description");
  }
  if (!f.has_finite_samples()) {
    fail(ErrorCode::NumericInput, "generator has non-finite samples");
  }
  const double scale = l2_norm(f);
  if (scale < tol::kGeneratorFloor) {
    fail(ErrorCode::DegenerateGenerator, "generator is numerically zero");
  }
  const Grid grid = f.grid();
  const CircleFunction nf = cplx{1.0 / scale, 0.0} * f;

  const SubspaceModel model =
      build_cyclic_subspace(nf, params.n_basis, params.m_trunc);
  const double d_back = distance_to_subspace(monomial(grid, -1) * nf, model);
  const double d_fwd = distance_to_subspace(monomial(grid, +1) * nf, model);
  const LogIntegrability log_report = log_integrability(modulus_of(nf));

  Classification out;
  out.params = params;
  out.certificate.dist_backward = d_back;
  out.certificate.dist_forward = d_fwd;
  out.certificate.log_report = log_report;

  if (d_back < params.tau_doubly) {
    // Reducing branch. Consistency: a generator spanning a reducing
    // subspace is supported off a set of positive measure, so its log
    // integral must diverge.
    if (log_report.pass) {
      fail(ErrorCode::InconsistentCrossCheck,
           "backward-shift distance indicates a reducing subspace but the "
           "modulus is log-integrable");
    }
    out.verdict = Verdict::DoublyInvariant;
    const std::vector<cplx>& s = nf.samples();
    double top = 0.0;
    for (const cplx& v : s) top = std::max(top, std::abs(v));
    out.e_mask.resize(nf.size());
    double regen = 0.0;
    for (std::size_t j = 0; j < nf.size(); ++j) {
      out.e_mask[j] = std::abs(s[j]) > tol::kMaskRel * top;
      if (!out.e_mask[j]) regen = std::max(regen, std::abs(s[j]));
    }
    out.certificate.regeneration_residual = regen;
    out.certificate.margin = params.tau_doubly / std::max(d_back, 1e-300);
  } else {
    if (!log_report.pass) {
      fail(ErrorCode::InconsistentCrossCheck,
           "backward-shift distance indicates a non-reducing subspace but "
           "the modulus fails log-integrability");
    }
    out.verdict = Verdict::SimplyInvariant;
    const CircleFunction g = outer_from_modulus(modulus_of(nf));
    detail::GuardedQuotient q = detail::guarded_divide(nf, g);
    out.phi = q.quotient;
    double unim = 0.0;
    for (std::size_t j = 0; j < nf.size(); ++j) {
      unim = std::max(unim, std::abs(std::abs(out.phi[j]) - 1.0));
    }
    out.certificate.phi_unimodularity = unim;
    const CircleFunction regenerated =
        out.phi * riesz_projection(conj_samples(out.phi) * nf);
    out.certificate.regeneration_residual = l2_norm(nf - regenerated);
    out.certificate.margin = d_back / params.tau_doubly;
  }
  return out;
}

CertificateVerification verify_certificate(const Classification& c,
                                           const CircleFunction& f,
                                           const GaugeNormSpec& spec) {
  CertificateVerification v;
  const double scale = l2_norm(f);
  if (scale < tol::kGeneratorFloor) {
    v.failures.push_back("generator is numerically zero");
    return v;
  }
  const Grid grid = f.grid();
  const CircleFunction nf = cplx{1.0 / scale, 0.0} * f;
  const SubspaceModel model =
      build_cyclic_subspace(nf, c.params.n_basis, c.params.m_trunc);
  v.backward_distance = distance_to_subspace(monomial(grid, -1) * nf, model);
  v.forward_distance = distance_to_subspace(monomial(grid, +1) * nf, model);

  if (v.forward_distance > tol::kForwardDistanceTol) {
    v.failures.push_back("forward-shift distance exceeds tolerance");
  }

  if (c.verdict == Verdict::DoublyInvariant) {
    if (!(v.backward_distance < c.params.tau_doubly)) {
      v.failures.push_back("backward distance does not certify a reducing subspace");
    }
    if (c.e_mask.size() != nf.size()) {
      v.failures.push_back("support mask has the wrong shape");
    } else {
      double err = 0.0;
      for (std::size_t j = 0; j < nf.size(); ++j) {
        if (!c.e_mask[j]) err = std::max(err, std::abs(nf[j]));
      }
      v.mask_identity_error = err;
      if (err > tol::kMaskIdentityTol) {
        v.failures.push_back("masking by the claimed support changes the generator");
      }
    }
  } else {
    if (c.phi.empty() || c.phi.size() != nf.size()) {
      v.failures.push_back("certificate carries no quotient function");
      return v;
    }
    double unim = 0.0;
    for (std::size_t j = 0; j < nf.size(); ++j) {
      unim = std::max(unim, std::abs(std::abs(c.phi[j]) - 1.0));
    }
    v.phi_unimodularity = unim;
    // Quotients come from sampled division with neighbor fill at guarded
    // nodes, which pays the local curvature: tolerate an h^2 term on top of
    // the flat bar so a single boundary zero does not void the certificate.
    const double h = grid.theta(1);
    if (unim > std::max(tol::kForwardDistanceTol, 10.0 * h * h)) {
      v.failures.push_back("quotient is not unimodular to tolerance");
    }
    v.strict_inclusion = v.backward_distance > 10.0 * c.params.tau_doubly;
    if (!v.strict_inclusion) {
      v.failures.push_back("backward distance is not safely above the threshold");
    }
    v.phi_negative_fraction = negative_energy_fraction(c.phi);
    const MembershipReport mem = is_in_Halpha(f, spec);
    if (mem.member && v.phi_negative_fraction > tol::kAnalyticTol) {
      v.failures.push_back("quotient is not analytic for an analytic generator");
    }
  }
  v.pass = v.failures.empty();
  return v;
}

std::vector<ApproximationStage> bounded_approximation(const CircleFunction& f,
                                                      const GaugeNormSpec& spec,
                                                      std::size_t stages) {
  if (!spec.continuous()) {
    fail(ErrorCode::UnsupportedNorm,
         "bounded approximation requires a continuous norm description");
  }
  if (!f.has_finite_samples()) {
    fail(ErrorCode::NumericInput, "input has non-finite samples");
  }
  if (stages == 0) return {};
  const std::size_t n = f.size();
  const Grid grid = f.grid();

  // Bounded inverse weight k = 1/(|f|+1), bounded below by 1/(sup|f|+1), so
  // its analytic factorization exists and 1/h is analytic with |1/h| = |f|+1.
  std::vector<cplx> ks(n);
  for (std::size_t j = 0; j < n; ++j) {
    ks[j] = cplx{1.0 / (std::abs(f[j]) + 1.0), 0.0};
  }
  const CircleFunction k = CircleFunction::from_samples(grid, std::move(ks));
  const FactorizationResult fact = factorize_inverse_bounded(k, spec);
  const CircleFunction& h = fact.outer;
  const CircleFunction inv_h =
      detail::guarded_divide(constant_function(grid, cplx{1.0, 0.0}), h).quotient;
  const CircleFunction hf = h * f;

  std::vector<ApproximationStage> out;
  out.reserve(stages);
  std::size_t degree = 0;
  for (std::size_t j = 0; j < stages; ++j) {
    if (j > 0) {
      std::size_t d = 1;
      for (std::size_t t = 0; t < j; ++t) d *= 8;
      degree = std::min(d, n / 2 - 1);
    }
    const CircleFunction smoothed = cesaro_mean(inv_h, degree);
    ApproximationStage stage;
    stage.degree = degree;
    stage.bounded = smoothed * hf;
    stage.alpha_error = evaluate(spec, f - stage.bounded);
    out.push_back(std::move(stage));
  }
  return out;
}

}  // namespace hardy
