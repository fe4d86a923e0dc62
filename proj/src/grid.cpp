#include "hardy/grid.hpp"

#include <cmath>
#include <mutex>
#include <string>
#include <utility>

#include "hardy/parallel.hpp"
#include "hardy/spectral.hpp"

namespace hardy {

namespace {
bool is_pow2(std::size_t n) { return n != 0 && (n & (n - 1)) == 0; }
}  // namespace

Grid Grid::make(std::size_t n) {
  if (n < 8 || !is_pow2(n)) {
    fail(ErrorCode::InvalidGrid,
         "grid size must be a power of two and at least 8, got " + std::to_string(n));
  }
  return Grid{n};
}

double Grid::theta(std::size_t j) const noexcept {
  return 2.0 * M_PI * static_cast<double>(j) / static_cast<double>(n);
}

cplx Grid::node(std::size_t j) const noexcept {
  const double t = theta(j);
  return {std::cos(t), std::sin(t)};
}

long spectral_index(std::size_t slot, std::size_t n) noexcept {
  const long j = static_cast<long>(slot);
  const long half = static_cast<long>(n) / 2;
  return j <= half ? j : j - static_cast<long>(n);
}

std::size_t slot_of(long k, std::size_t n) noexcept {
  const long m = static_cast<long>(n);
  long r = k % m;
  if (r < 0) r += m;
  return static_cast<std::size_t>(r);
}

struct CircleFunction::Body {
  Grid grid;
  std::vector<cplx> samples;

  mutable std::mutex mu;
  mutable std::vector<cplx> spectrum;  // DFT layout; empty until first use
  mutable bool spectrum_ready = false;

  Body(Grid g, std::vector<cplx> s) : grid(g), samples(std::move(s)) {}
};

CircleFunction CircleFunction::from_samples(const Grid& g, std::vector<cplx> samples) {
  if (samples.size() != g.n) {
    fail(ErrorCode::ShapeMismatch,
         "sample count " + std::to_string(samples.size()) + " does not match grid size " +
             std::to_string(g.n));
  }
  CircleFunction f;
  f.body_ = std::make_shared<Body>(g, std::move(samples));
  return f;
}

CircleFunction CircleFunction::from_spectrum(const Grid& g, std::vector<cplx> layout) {
  if (layout.size() != g.n) {
    fail(ErrorCode::ShapeMismatch,
         "spectrum length " + std::to_string(layout.size()) + " does not match grid size " +
             std::to_string(g.n));
  }
  for (const cplx& c : layout) {
    if (!std::isfinite(c.real()) || !std::isfinite(c.imag())) {
      fail(ErrorCode::NumericInput, "non-finite spectral coefficient");
    }
  }
  std::vector<cplx> samples = dft_inverse(layout);
  CircleFunction f;
  f.body_ = std::make_shared<Body>(g, std::move(samples));
  {
    std::lock_guard<std::mutex> lock(f.body_->mu);
    f.body_->spectrum = std::move(layout);
    f.body_->spectrum_ready = true;
  }
  return f;
}

const Grid& CircleFunction::grid() const {
  if (!body_) fail(ErrorCode::ShapeMismatch, "use of empty function");
  return body_->grid;
}

std::size_t CircleFunction::size() const { return grid().n; }

const std::vector<cplx>& CircleFunction::samples() const {
  if (!body_) fail(ErrorCode::ShapeMismatch, "use of empty function");
  return body_->samples;
}

cplx CircleFunction::operator[](std::size_t j) const { return samples()[j]; }

bool CircleFunction::has_finite_samples() const {
  for (const cplx& v : samples()) {
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) return false;
  }
  return true;
}

const std::vector<cplx>& CircleFunction::spectrum() const {
  if (!body_) fail(ErrorCode::ShapeMismatch, "use of empty function");
  std::lock_guard<std::mutex> lock(body_->mu);
  if (!body_->spectrum_ready) {
    if (!has_finite_samples()) {
      fail(ErrorCode::NumericInput, "cannot transform non-finite samples");
    }
    body_->spectrum = dft_forward(body_->samples);
    body_->spectrum_ready = true;
  }
  return body_->spectrum;
}

cplx CircleFunction::coefficient(long k) const {
  const long half = static_cast<long>(size()) / 2;
  if (k <= -half || k > half) return {0.0, 0.0};
  return spectrum()[slot_of(k, size())];
}

CircleFunction constant_function(const Grid& g, cplx value) {
  return CircleFunction::from_samples(g, std::vector<cplx>(g.n, value));
}

CircleFunction monomial(const Grid& g, long k) {
  std::vector<cplx> s(g.n);
  for (std::size_t j = 0; j < g.n; ++j) {
    const double t = static_cast<double>(k) * g.theta(j);
    s[j] = {std::cos(t), std::sin(t)};
  }
  return CircleFunction::from_samples(g, std::move(s));
}

CircleFunction indicator_arc(const Grid& g, std::size_t first, std::size_t count) {
  if (count > g.n) {
    fail(ErrorCode::ShapeMismatch, "arc longer than the whole circle");
  }
  std::vector<cplx> s(g.n, cplx{0.0, 0.0});
  for (std::size_t j = 0; j < count; ++j) s[(first + j) % g.n] = cplx{1.0, 0.0};
  return CircleFunction::from_samples(g, std::move(s));
}

CircleFunction modulus_of(const CircleFunction& f) {
  const std::size_t n = f.size();
  std::vector<cplx> s(n);
  const std::vector<cplx>& in = f.samples();
  parallel_for(n, [&](std::size_t j) { s[j] = cplx{std::abs(in[j]), 0.0}; });
  return CircleFunction::from_samples(f.grid(), std::move(s));
}

std::vector<double> magnitudes_of(const CircleFunction& f) {
  const std::size_t n = f.size();
  std::vector<double> m(n);
  const std::vector<cplx>& in = f.samples();
  parallel_for(n, [&](std::size_t j) { m[j] = std::abs(in[j]); });
  return m;
}

CircleFunction operator+(const CircleFunction& a, const CircleFunction& b) {
  require_same_grid(a, b);
  const std::size_t n = a.size();
  std::vector<cplx> s(n);
  parallel_for(n, [&](std::size_t j) { s[j] = a[j] + b[j]; });
  return CircleFunction::from_samples(a.grid(), std::move(s));
}

CircleFunction operator-(const CircleFunction& a, const CircleFunction& b) {
  require_same_grid(a, b);
  const std::size_t n = a.size();
  std::vector<cplx> s(n);
  parallel_for(n, [&](std::size_t j) { s[j] = a[j] - b[j]; });
  return CircleFunction::from_samples(a.grid(), std::move(s));
}

CircleFunction operator*(const CircleFunction& a, const CircleFunction& b) {
  require_same_grid(a, b);
  const std::size_t n = a.size();
  std::vector<cplx> s(n);
  parallel_for(n, [&](std::size_t j) { s[j] = a[j] * b[j]; });
  return CircleFunction::from_samples(a.grid(), std::move(s));
}

CircleFunction operator*(cplx c, const CircleFunction& f) {
  const std::size_t n = f.size();
  std::vector<cplx> s(n);
  parallel_for(n, [&](std::size_t j) { s[j] = c * f[j]; });
  return CircleFunction::from_samples(f.grid(), std::move(s));
}

double sup_norm(const CircleFunction& f) {
  const std::vector<cplx>& s = f.samples();
  const std::size_t n = s.size();
  const std::size_t nb = (n + detail::kReduceBlock - 1) / detail::kReduceBlock;
  std::vector<double> partial(nb, 0.0);
  parallel_for(nb, [&](std::size_t b) {
    const std::size_t lo = b * detail::kReduceBlock;
    const std::size_t hi = std::min(n, lo + detail::kReduceBlock);
    double m = 0.0;
    for (std::size_t j = lo; j < hi; ++j) m = std::max(m, std::abs(s[j]));
    partial[b] = m;
  });
  double m = 0.0;
  for (std::size_t b = 0; b < nb; ++b) m = std::max(m, partial[b]);
  return m;
}

double l1_norm(const CircleFunction& f) {
  const std::vector<cplx>& s = f.samples();
  const double total =
      blocked_reduce<double>(s.size(), [&](std::size_t j) { return std::abs(s[j]); });
  return total / static_cast<double>(s.size());
}

double l2_norm(const CircleFunction& f) {
  const std::vector<cplx>& s = f.samples();
  const double total =
      blocked_reduce<double>(s.size(), [&](std::size_t j) { return std::norm(s[j]); });
  return std::sqrt(total / static_cast<double>(s.size()));
}

void require_same_grid(const CircleFunction& a, const CircleFunction& b) {
  if (a.grid().n != b.grid().n) {
    fail(ErrorCode::ShapeMismatch, "operands live on different grids (" +
                                       std::to_string(a.grid().n) + " vs " +
                                       std::to_string(b.grid().n) + ")");
  }
}

}  // namespace hardy
