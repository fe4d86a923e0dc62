#include <cmath>
#include <limits>

#include "doctest.h"
#include "hardy/grid.hpp"
#include "oracles.hpp"

using namespace hardy;

TEST_SUITE("grid") {

TEST_CASE("grid construction enforces the power-of-two contract") {
  CHECK(Grid::make(8).n == 8);
  CHECK(Grid::make(4096).n == 4096);
  CHECK_THROWS_AS(Grid::make(0), Error);
  CHECK_THROWS_AS(Grid::make(4), Error);    // below the minimum
  CHECK_THROWS_AS(Grid::make(12), Error);   // not a power of two
  CHECK_THROWS_AS(Grid::make(1000), Error);
  try {
    Grid::make(12);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::InvalidGrid);
  }
}

TEST_CASE("node placement and spectral index round trip") {
  const Grid g = Grid::make(16);
  CHECK(g.theta(0) == 0.0);
  CHECK(g.node(4).real() == doctest::Approx(0.0).epsilon(1e-15));
  CHECK(g.node(4).imag() == doctest::Approx(1.0));
  for (long k = -7; k <= 8; ++k) {
    CHECK(spectral_index(slot_of(k, 16), 16) == k);
  }
  CHECK(slot_of(-1, 16) == 15);
  CHECK(slot_of(8, 16) == 8);
}

TEST_CASE("monomial spectra are unit coefficients in the right slot") {
  const Grid g = Grid::make(64);
  for (long k : {0L, 1L, 5L, -3L, 32L}) {
    const CircleFunction f = monomial(g, k);
    CHECK(std::abs(f.coefficient(k) - cplx{1.0, 0.0}) < 1e-12);
    CHECK(std::abs(f.coefficient(k == 2 ? 3 : 2)) < 1e-12);
  }
  // outside the convention window the coefficient reads back as zero
  CHECK(monomial(g, 5).coefficient(40) == cplx{0.0, 0.0});
  CHECK(monomial(g, 5).coefficient(-33) == cplx{0.0, 0.0});
}

TEST_CASE("indicator arcs have exact mean and wrap around") {
  const Grid g = Grid::make(32);
  const CircleFunction a = indicator_arc(g, 30, 6);  // wraps through slot 0
  CHECK(l1_norm(a) == doctest::Approx(6.0 / 32.0).epsilon(1e-15));
  CHECK(a[30].real() == 1.0);
  CHECK(a[3].real() == 1.0);
  CHECK(a[4].real() == 0.0);
}

TEST_CASE("arithmetic operators act pointwise") {
  const Grid g = Grid::make(8);
  const CircleFunction z = monomial(g, 1);
  const CircleFunction w = monomial(g, -1);
  const CircleFunction p = z * w;  // |z|^2 = 1
  for (std::size_t j = 0; j < 8; ++j) {
    CHECK(std::abs(p[j] - cplx{1.0, 0.0}) < 1e-15);
  }
  const CircleFunction s = z + w;  // 2 cos(theta)
  CHECK(s[0].real() == doctest::Approx(2.0));
  CHECK(std::abs((cplx{0.0, 2.0} * z)[2] - cplx{0.0, 2.0} * z[2]) == 0.0);
  const CircleFunction d = z - z;
  CHECK(sup_norm(d) == 0.0);
}

TEST_CASE("norms of simple functions come out exact") {
  const Grid g = Grid::make(16);
  const CircleFunction half = indicator_arc(g, 0, 8);
  CHECK(l1_norm(half) == 0.5);
  CHECK(l2_norm(half) == doctest::Approx(std::sqrt(0.5)).epsilon(1e-15));
  CHECK(sup_norm(half) == 1.0);
}

TEST_CASE("spectrum access rejects non-finite samples") {
  const Grid g = Grid::make(8);
  std::vector<cplx> s(8, cplx{1.0, 0.0});
  s[3] = cplx{std::numeric_limits<double>::quiet_NaN(), 0.0};
  const CircleFunction f = CircleFunction::from_samples(g, s);
  CHECK_FALSE(f.has_finite_samples());
  CHECK_THROWS_AS(f.spectrum(), Error);
  try {
    f.spectrum();
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NumericInput);
  }
}

TEST_CASE("grid mismatch is refused") {
  const CircleFunction a = monomial(Grid::make(8), 1);
  const CircleFunction b = monomial(Grid::make(16), 1);
  CHECK_THROWS_AS(a + b, Error);
  CHECK_THROWS_AS(require_same_grid(a, b), Error);
}

TEST_CASE("from_spectrum validates finiteness") {
  const Grid g = Grid::make(8);
  std::vector<cplx> layout(8, cplx{0.0, 0.0});
  layout[0] = cplx{std::numeric_limits<double>::infinity(), 0.0};
  CHECK_THROWS_AS(CircleFunction::from_spectrum(g, layout), Error);
}

}  // TEST_SUITE
