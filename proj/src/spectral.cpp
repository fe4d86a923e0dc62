#include "hardy/spectral.hpp"

#include <cmath>
#include <string>

#include "hardy/parallel.hpp"
#include "hardy/tolerances.hpp"
#include "internal.hpp"

namespace hardy {

namespace {

unsigned log2_of(std::size_t n) {
  unsigned lg = 0;
  while ((std::size_t{1} << lg) < n) ++lg;
  return lg;
}

}  // namespace

void fft_inplace(std::vector<cplx>& x, int sign) {
  const std::size_t n = x.size();
  if (n == 0 || (n & (n - 1)) != 0) {
    fail(ErrorCode::InvalidGrid, "transform length must be a power of two");
  }
  count_fft();
  if (n == 1) return;

  const unsigned lg = log2_of(n);

  // Bit-reversal permutation.
  std::vector<std::size_t> rev(n, 0);
  for (std::size_t j = 1; j < n; ++j) {
    rev[j] = (rev[j >> 1] >> 1) | ((j & 1) << (lg - 1));
  }
  for (std::size_t j = 0; j < n; ++j) {
    if (j < rev[j]) std::swap(x[j], x[rev[j]]);
  }

  // Twiddle table tw[t] = e^{sign * 2 pi i t / n}, t < n/2, computed directly
  // per entry (no recurrence) so every stage reads identical values no matter
  // how the butterflies are scheduled.
  const std::size_t half_n = n / 2;
  std::vector<cplx> tw(half_n);
  parallel_for(half_n, [&](std::size_t t) {
    const double ang = 2.0 * M_PI * static_cast<double>(t) / static_cast<double>(n);
    tw[t] = cplx{std::cos(ang), sign < 0 ? -std::sin(ang) : std::sin(ang)};
  });

  // Each stage runs n/2 independent butterflies; butterfly b owns exactly the
  // two slots it writes, so the stage is race-free and order-insensitive.
  for (std::size_t len = 2; len <= n; len <<= 1) {
    const std::size_t half = len >> 1;
    const std::size_t stride = n / len;
    parallel_for(half_n, [&](std::size_t b) {
      const std::size_t block = b / half;
      const std::size_t j = b % half;
      const std::size_t base = block * len;
      const cplx w = tw[j * stride];
      const cplx u = x[base + j];
      const cplx v = x[base + j + half] * w;
      x[base + j] = u + v;
      x[base + j + half] = u - v;
    });
  }
}

std::vector<cplx> dft_forward(const std::vector<cplx>& samples) {
  std::vector<cplx> out = samples;
  fft_inplace(out, -1);
  const double inv_n = 1.0 / static_cast<double>(out.size());
  parallel_for(out.size(), [&](std::size_t j) { out[j] *= inv_n; });
  return out;
}

std::vector<cplx> dft_inverse(const std::vector<cplx>& layout) {
  std::vector<cplx> out = layout;
  fft_inplace(out, +1);
  return out;
}

const std::vector<cplx>& fourier_coefficients(const CircleFunction& f) {
  return f.spectrum();
}

CircleFunction from_coefficients(const Grid& g, const std::vector<cplx>& layout) {
  return CircleFunction::from_spectrum(g, layout);
}

double parseval_gap(const CircleFunction& f) {
  const std::vector<cplx>& s = f.samples();
  const std::vector<cplx>& c = f.spectrum();
  const std::size_t n = s.size();
  const double mean_sq =
      blocked_reduce<double>(n, [&](std::size_t j) { return std::norm(s[j]); }) /
      static_cast<double>(n);
  const double coeff_sq =
      blocked_reduce<double>(n, [&](std::size_t j) { return std::norm(c[j]); });
  const double gap = std::abs(coeff_sq - mean_sq);
  return mean_sq > 0.0 ? gap / mean_sq : gap;
}

double negative_energy(const CircleFunction& f) {
  const std::vector<cplx>& c = f.spectrum();
  const std::size_t n = c.size();
  return blocked_reduce<double>(n, [&](std::size_t j) {
    return spectral_index(j, n) < 0 ? std::norm(c[j]) : 0.0;
  });
}

double negative_energy_fraction(const CircleFunction& f) {
  const std::vector<cplx>& c = f.spectrum();
  const std::size_t n = c.size();
  const double total =
      blocked_reduce<double>(n, [&](std::size_t j) { return std::norm(c[j]); });
  if (total == 0.0) return 0.0;
  return negative_energy(f) / total;
}

CircleFunction cesaro_mean(const CircleFunction& f, std::size_t m) {
  const std::size_t n = f.size();
  if (m >= n / 2) {
    fail(ErrorCode::Resolution,
         "averaging order " + std::to_string(m) + " needs a grid larger than " +
             std::to_string(n));
  }
  const std::vector<cplx>& c = f.spectrum();
  std::vector<cplx> out(n);
  parallel_for(n, [&](std::size_t j) {
    const long ks = spectral_index(j, n);
    const double k = static_cast<double>(ks < 0 ? -ks : ks);
    const double w = 1.0 - k / (static_cast<double>(m) + 1.0);
    out[j] = w > 0.0 ? c[j] * w : cplx{0.0, 0.0};
  });
  return CircleFunction::from_spectrum(f.grid(), std::move(out));
}

CircleFunction riesz_projection(const CircleFunction& f) {
  const std::size_t n = f.size();
  const std::vector<cplx>& c = f.spectrum();
  std::vector<cplx> out(n);
  parallel_for(n, [&](std::size_t j) {
    out[j] = spectral_index(j, n) < 0 ? cplx{0.0, 0.0} : c[j];
  });
  return CircleFunction::from_spectrum(f.grid(), std::move(out));
}

namespace detail {

void require_real(const CircleFunction& u, const char* what) {
  const std::vector<cplx>& s = u.samples();
  double max_abs = 0.0, max_imag = 0.0;
  for (const cplx& v : s) {
    max_abs = std::max(max_abs, std::abs(v));
    max_imag = std::max(max_imag, std::abs(v.imag()));
  }
  if (max_imag > 1e-12 * (1.0 + max_abs)) {
    fail(ErrorCode::DomainError, std::string(what) + " must be real-valued");
  }
}

FlooredLog floored_log_profile(const CircleFunction& phi) {
  require_real(phi, "modulus profile");
  const std::vector<cplx>& s = phi.samples();
  const std::size_t n = s.size();
  FlooredLog out;
  out.logs.resize(n);
  for (std::size_t j = 0; j < n; ++j) {
    const double v = s[j].real();
    if (v < 0.0) {
      fail(ErrorCode::DomainError, "modulus profile must be nonnegative");
    }
    if (v < tol::kZeroThreshold) ++out.vanishing;
    out.logs[j] = std::log(std::max(v, tol::kLogFloor));
  }
  out.mean = blocked_sum(out.logs.data(), n) / static_cast<double>(n);
  return out;
}

bool vanishing_gate_ok(std::size_t vanishing, std::size_t n) {
  return static_cast<double>(vanishing) <=
         tol::kGateFraction * static_cast<double>(n);
}

}  // namespace detail

CircleFunction conjugate_function(const CircleFunction& u) {
  detail::require_real(u, "conjugate input");
  const std::size_t n = u.size();
  const std::vector<cplx>& c = u.spectrum();
  std::vector<cplx> out(n);
  const cplx minus_i{0.0, -1.0};
  parallel_for(n, [&](std::size_t j) {
    const long k = spectral_index(j, n);
    if (k == 0 || k == static_cast<long>(n) / 2) {
      out[j] = cplx{0.0, 0.0};
    } else if (k > 0) {
      out[j] = minus_i * c[j];
    } else {
      out[j] = -minus_i * c[j];
    }
  });
  // The multiplier preserves Hermitian symmetry, so the result is real up to
  // rounding; drop the rounding dirt to keep "real-valued" composable.
  CircleFunction q = CircleFunction::from_spectrum(u.grid(), std::move(out));
  std::vector<cplx> real_samples(n);
  const std::vector<cplx>& qs = q.samples();
  parallel_for(n, [&](std::size_t j) { real_samples[j] = cplx{qs[j].real(), 0.0}; });
  return CircleFunction::from_samples(u.grid(), std::move(real_samples));
}

cplx herglotz_evaluate_interior(const CircleFunction& phi, cplx z) {
  const std::size_t n = phi.size();
  const double r = std::abs(z);
  if (r >= 1.0) {
    fail(ErrorCode::DomainError, "evaluation point must lie strictly inside the disk");
  }
  if (1.0 - r < 1.0 / static_cast<double>(n)) {
    fail(ErrorCode::NearBoundary,
         "evaluation point is closer to the boundary than the grid can resolve");
  }
  detail::FlooredLog prof = detail::floored_log_profile(phi);
  if (!detail::vanishing_gate_ok(prof.vanishing, n)) {
    fail(ErrorCode::VanishingModulus,
         "modulus vanishes on too large a set (" + std::to_string(prof.vanishing) +
             " of " + std::to_string(n) + " nodes)");
  }
  if (z == cplx{0.0, 0.0}) {
    // Kernel is identically 1 at the center.
    return std::exp(cplx{prof.mean, 0.0});
  }
  const Grid g = phi.grid();
  const cplx integral = blocked_reduce<cplx>(n, [&](std::size_t j) {
    const cplx w = g.node(j);
    return (w + z) / (w - z) * prof.logs[j];
  });
  return std::exp(integral / static_cast<double>(n));
}

}  // namespace hardy
