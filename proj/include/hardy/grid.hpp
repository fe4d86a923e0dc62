#pragma once

#include <complex>
#include <cstddef>
#include <memory>
#include <vector>

#include "hardy/errors.hpp"

namespace hardy {

using cplx = std::complex<double>;

// Uniform grid on the unit circle. Node j sits at theta_j = 2*pi*j/n; the
// quadrature weight of every node is 1/n (normalized arc length), so the
// quadrature of the constant 1 is exactly 1.
struct Grid {
  std::size_t n = 0;

  // n must be a power of two, n >= 8.
  static Grid make(std::size_t n);

  double theta(std::size_t j) const noexcept;
  cplx node(std::size_t j) const noexcept;  // e^{i theta_j}
  bool operator==(const Grid&) const = default;
};

// Spectral index of DFT storage slot j: k = j for j <= n/2, else j - n.
// Coefficients are indexed -n/2 < k <= n/2.
long spectral_index(std::size_t slot, std::size_t n) noexcept;
std::size_t slot_of(long k, std::size_t n) noexcept;

// Immutable complex-valued grid function with a lazily cached spectrum.
// Copies share storage; safe to read from multiple threads.
class CircleFunction {
 public:
  CircleFunction() = default;

  static CircleFunction from_samples(const Grid& g, std::vector<cplx> samples);
  // layout: DFT slot order (c_k stored at slot k mod n).
  static CircleFunction from_spectrum(const Grid& g, std::vector<cplx> layout);

  bool empty() const noexcept { return body_ == nullptr; }
  const Grid& grid() const;
  std::size_t size() const;
  const std::vector<cplx>& samples() const;
  cplx operator[](std::size_t j) const;

  // Fourier coefficients in DFT layout. Throws a numeric-input error when
  // any sample is non-finite.
  const std::vector<cplx>& spectrum() const;
  cplx coefficient(long k) const;  // 0 outside (-n/2, n/2]

  bool has_finite_samples() const;

 private:
  struct Body;
  std::shared_ptr<Body> body_;
};

CircleFunction constant_function(const Grid& g, cplx value);
CircleFunction monomial(const Grid& g, long k);  // boundary samples of z^k
CircleFunction indicator_arc(const Grid& g, std::size_t first, std::size_t count);

CircleFunction modulus_of(const CircleFunction& f);
std::vector<double> magnitudes_of(const CircleFunction& f);

CircleFunction operator+(const CircleFunction& a, const CircleFunction& b);
CircleFunction operator-(const CircleFunction& a, const CircleFunction& b);
CircleFunction operator*(const CircleFunction& a, const CircleFunction& b);
CircleFunction operator*(cplx c, const CircleFunction& f);

double sup_norm(const CircleFunction& f);
double l1_norm(const CircleFunction& f);   // mean |f|
double l2_norm(const CircleFunction& f);   // sqrt(mean |f|^2)

void require_same_grid(const CircleFunction& a, const CircleFunction& b);

}  // namespace hardy
