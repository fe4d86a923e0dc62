#pragma once

#include "hardy/grid.hpp"

namespace hardy {

// In-place radix-2 transform over DFT storage layout, no scaling.
// sign = -1: forward kernel e^{-2pi i jk/n}; sign = +1: inverse kernel.
// Butterflies write disjoint slots, so parallel execution is bitwise
// identical to serial.
void fft_inplace(std::vector<cplx>& x, int sign);

// c_k = (1/n) sum_j f_j e^{-ik theta_j}, DFT layout.
std::vector<cplx> dft_forward(const std::vector<cplx>& samples);
std::vector<cplx> dft_inverse(const std::vector<cplx>& layout);

const std::vector<cplx>& fourier_coefficients(const CircleFunction& f);
CircleFunction from_coefficients(const Grid& g, const std::vector<cplx>& layout);

// |sum_k |c_k|^2 - mean |f|^2| / mean |f|^2
double parseval_gap(const CircleFunction& f);

// Energy of coefficients with k < 0 (absolute, and as fraction of total).
double negative_energy(const CircleFunction& f);
double negative_energy_fraction(const CircleFunction& f);

// Fejer-weighted truncation: coefficient c_k scaled by max(0, 1-|k|/(m+1)).
// Equals the average of the symmetric partial sums S_0..S_m.
// Requires m < n/2.
CircleFunction cesaro_mean(const CircleFunction& f, std::size_t m);

// Zeroes all coefficients with k < 0.
CircleFunction riesz_projection(const CircleFunction& f);

// Boundary conjugate: (Qu)_k = -i sgn(k) u_k, (Qu)_0 = 0. Input must be
// real-valued; the Nyquist slot (k = n/2) is forced to 0 so the result is
// again real-valued. u + iQu has one-sided spectrum.
CircleFunction conjugate_function(const CircleFunction& u);

// Quadrature of exp( integral (w+z)/(w-z) log phi(w) dm(w) ) over the grid,
// with log phi floored; phi must pass the vanishing-set gate.
// Refuses |z| >= 1 (domain) and 1 - |z| < 1/n (near-boundary).
cplx herglotz_evaluate_interior(const CircleFunction& phi, cplx z);

}  // namespace hardy
