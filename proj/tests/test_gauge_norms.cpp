#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

#include "doctest.h"
#include "hardy/gauge_norm.hpp"
#include "oracles.hpp"

using namespace hardy;

namespace {

CircleFunction from_mags(const Grid& g, const std::vector<double>& a) {
  std::vector<cplx> s(a.size());
  for (std::size_t j = 0; j < a.size(); ++j) s[j] = cplx{a[j], 0.0};
  return CircleFunction::from_samples(g, std::move(s));
}

}  // namespace

TEST_SUITE("gauge") {

TEST_CASE("the constant 1 evaluates to exactly 1 under every spec") {
  const Grid g = Grid::make(512);
  const CircleFunction one = constant_function(g, 1.0);
  for (const auto& [name, spec] : shipped_continuous_specs()) {
    INFO(name);
    CHECK(evaluate(spec, one) == 1.0);  // bitwise, not approximate
  }
  CHECK(evaluate(GaugeNormSpec::linfinity(), one) == 1.0);
}

TEST_CASE("indicator values match closed forms") {
  const Grid g = Grid::make(64);
  const CircleFunction quarter = indicator_arc(g, 5, 16);
  const CircleFunction half = indicator_arc(g, 0, 32);
  CHECK(evaluate(GaugeNormSpec::lp(1.0), half) == doctest::Approx(0.5).epsilon(1e-15));
  CHECK(evaluate(GaugeNormSpec::lp(2.0), quarter) ==
        doctest::Approx(0.5).epsilon(1e-15));
  CHECK(evaluate(GaugeNormSpec::lp(3.0), indicator_arc(g, 0, 8)) ==
        doctest::Approx(0.5).epsilon(1e-14));  // (1/8)^{1/3}
  CHECK(evaluate(GaugeNormSpec::linfinity(), quarter) == 1.0);
}

TEST_CASE("weighted mix evaluates by direct per-term summation") {
  // weights 1/2, 1/4, ..., 1/256 renormalized over 8 terms; exponents 1..8
  std::vector<double> w(8), p(8);
  double total = 0.0;
  for (int i = 0; i < 8; ++i) {
    w[i] = std::pow(0.5, i + 1);
    p[i] = static_cast<double>(i + 1);
    total += w[i];
  }
  for (double& v : w) v /= total;
  const GaugeNormSpec spec = GaugeNormSpec::weighted_lp_mix(w, p);
  const Grid g = Grid::make(64);
  double want = 0.0;
  for (int i = 0; i < 8; ++i) want += w[i] * std::pow(0.25, 1.0 / p[i]);
  CHECK(evaluate(spec, indicator_arc(g, 3, 16)) ==
        doctest::Approx(want).epsilon(1e-14));
}

TEST_CASE("rearrangement norm matches the from-scratch oracle") {
  oracle::Rng rng(7);
  const Grid g = Grid::make(128);
  const GaugeNormSpec spec = GaugeNormSpec::lorentz(2.0, 1.0);
  const double ones_raw = oracle::naive_lorentz(std::vector<double>(g.n, 1.0), 2.0, 1.0);
  for (int t = 0; t < 20; ++t) {
    const std::vector<double> a = oracle::random_simple(rng, g.n);
    const double want = oracle::naive_lorentz(a, 2.0, 1.0) / ones_raw;
    CHECK(evaluate(spec, from_mags(g, a)) == doctest::Approx(want).epsilon(1e-12));
  }
}

TEST_CASE("rearrangement invariance: rotations do not change any norm") {
  oracle::Rng rng(8);
  const Grid g = Grid::make(128);
  std::vector<double> a = oracle::random_simple(rng, g.n);
  std::vector<double> rot(g.n);
  for (std::size_t j = 0; j < g.n; ++j) rot[j] = a[(j + 37) % g.n];
  for (const auto& [name, spec] : shipped_continuous_specs()) {
    INFO(name);
    CHECK(evaluate(spec, from_mags(g, a)) ==
          doctest::Approx(evaluate(spec, from_mags(g, rot))).epsilon(1e-13));
  }
}

TEST_CASE("every shipped norm sits between the L1 and sup norms") {
  oracle::Rng rng(9);
  const Grid g = Grid::make(256);
  for (int t = 0; t < 25; ++t) {
    const std::vector<double> a = oracle::random_simple(rng, g.n);
    const CircleFunction f = from_mags(g, a);
    const double l1 = l1_norm(f), sup = sup_norm(f);
    for (const auto& [name, spec] : shipped_continuous_specs()) {
      INFO(name);
      const double v = evaluate(spec, f);
      CHECK(v >= l1 - 1e-12 * (1.0 + sup));
      CHECK(v <= sup + 1e-12 * (1.0 + sup));
    }
  }
}

TEST_CASE("indicator_norm agrees with evaluating an actual arc") {
  const Grid g = Grid::make(64);
  for (std::size_t k : {std::size_t{1}, std::size_t{7}, std::size_t{32},
                        std::size_t{64}}) {
    const CircleFunction chi = indicator_arc(g, 11, k);
    for (const auto& [name, spec] : shipped_continuous_specs()) {
      INFO(name, " k=", k);
      CHECK(indicator_norm(spec, k, g.n) ==
            doctest::Approx(evaluate(spec, chi)).epsilon(1e-12));
    }
  }
}

TEST_CASE("axiom suite passes for shipped specs and linfinity") {
  for (const auto& [name, spec] : shipped_continuous_specs()) {
    INFO(name);
    const ValidationReport r = validate_axioms(spec, 60, 1234, 128);
    CHECK(r.passed);
  }
  CHECK(validate_axioms(GaugeNormSpec::linfinity(), 60, 1234, 128).passed);
}

TEST_CASE("a wrong normalization constant is caught with the constant witness") {
  const GaugeNormSpec bad = GaugeNormSpec::lorentz_with_constant(2.0, 1.0, 0.9);
  const ValidationReport r = validate_axioms(bad, 10, 5, 64);
  CHECK_FALSE(r.passed);
  bool normalization_failed = false;
  for (const AxiomCheck& c : r.checks) {
    if (c.name == "normalization") {
      normalization_failed = !c.passed;
      CHECK(c.witness.find("constant") != std::string::npos);
    }
  }
  CHECK(normalization_failed);

  const GaugeNormSpec bad2 =
      GaugeNormSpec::orlicz_with_constant(YoungTable::default_table(), 2.0);
  CHECK_FALSE(validate_axioms(bad2, 10, 5, 64).passed);
}

TEST_CASE("young tables reject shapes that are not convex increasing") {
  CHECK_THROWS_AS(YoungTable({1.0, 2.0, 3.0}, {0.0, 2.0, 3.0}), Error);  // concave
  CHECK_THROWS_AS(YoungTable({2.0, 1.0}, {1.0, 2.0}), Error);            // x not increasing
  CHECK_THROWS_AS(YoungTable({1.0, 2.0}, {2.0, 1.0}), Error);            // phi decreasing
  CHECK_THROWS_AS(YoungTable({1.0, 2.0}, {0.0, 0.0}), Error);            // never positive
  const YoungTable ok({1.0, 2.0, 4.0}, {1.0, 3.0, 9.0});
  CHECK(ok(0.0) == 0.0);
  CHECK(ok(2.0) == 3.0);
  CHECK(ok(3.0) == doctest::Approx(6.0));   // interpolated
  CHECK(ok(8.0) == doctest::Approx(21.0));  // final slope 3 extended
  CHECK(ok.inverse(3.0) == doctest::Approx(2.0));
}

TEST_CASE("continuity probe: shipped specs shrink with the arc, sup does not") {
  const Grid g = Grid::make(256);
  const std::vector<double> measures{0.5, 0.25, 0.125, 1.0 / 16, 1.0 / 256};
  for (const auto& [name, spec] : shipped_continuous_specs()) {
    INFO(name);
    const auto pairs = continuity_modulus(spec, g, measures);
    for (std::size_t i = 1; i < pairs.size(); ++i) {
      CHECK(pairs[i].second < pairs[i - 1].second);
    }
    CHECK(pairs.back().second < 0.2);
  }
  for (const auto& [t, v] : continuity_modulus(GaugeNormSpec::linfinity(), g, measures)) {
    (void)t;
    CHECK(v == 1.0);
  }
  CHECK_THROWS_AS(continuity_modulus(GaugeNormSpec::lp(2.0), g, {0.1234}), Error);
}

TEST_CASE("monotone truncation sequences converge from below") {
  oracle::Rng rng(11);
  const Grid g = Grid::make(256);
  for (const auto& [name, spec] : shipped_continuous_specs()) {
    INFO(name);
    for (int t = 0; t < 10; ++t) {
      std::vector<double> a = oracle::random_simple(rng, g.n);
      for (double& v : a) v *= 4.0;
      const double top = *std::max_element(a.begin(), a.end());
      const double limit = evaluate(spec, from_mags(g, a));
      double prev = 0.0;
      for (double cap = 0.5;; cap *= 2.0) {
        std::vector<double> trunc(a);
        for (double& v : trunc) v = std::min(v, cap);
        const double val = evaluate(spec, from_mags(g, trunc));
        CHECK(val >= prev - 1e-12);
        prev = val;
        if (cap >= top) break;
      }
      CHECK(std::abs(prev - limit) <= 1e-10);
    }
  }
}

TEST_CASE("truncation sweep: bounded functions are exact, markers propagate") {
  const Grid g = Grid::make(256);
  oracle::Rng rng(12);
  const std::vector<double> a = oracle::random_simple(rng, g.n);
  const CircleFunction f = from_mags(g, a);
  for (const auto& [name, spec] : shipped_continuous_specs()) {
    INFO(name);
    const ExtendResult r = extend_to_measurable(spec, f);
    CHECK(r.stabilized);
    CHECK(r.value == doctest::Approx(evaluate(spec, f)).epsilon(1e-12));
    CHECK(r.trajectory.size() > 1);
  }
}

namespace {

// 1/sqrt(distance to theta = 0); the singular node is either dropped (0) or
// written as an overflow marker, depending on the caller.
CircleFunction sqrt_singularity(const Grid& g, cplx node0) {
  constexpr double kPi = 3.14159265358979323846;
  std::vector<cplx> s(g.n);
  s[0] = node0;
  for (std::size_t j = 1; j < g.n; ++j) {
    const double dist = std::min(g.theta(j), 2.0 * kPi - g.theta(j));
    s[j] = cplx{1.0 / std::sqrt(dist), 0.0};
  }
  return CircleFunction::from_samples(g, s);
}

}  // namespace

TEST_CASE("overflow markers block stabilization; resolved profiles settle") {
  const Grid g = Grid::make(4096);
  const CircleFunction resolved = sqrt_singularity(g, cplx{0.0, 0.0});
  const CircleFunction marked =
      sqrt_singularity(g, cplx{std::numeric_limits<double>::infinity(), 0.0});

  const ExtendResult fine = extend_to_measurable(GaugeNormSpec::lp(1.0), resolved, 1e9);
  CHECK(fine.stabilized);
  // integral of 1/sqrt over both half-circles: 2 / sqrt(pi)
  CHECK(fine.value ==
        doctest::Approx(2.0 / std::sqrt(3.14159265358979323846)).epsilon(3e-2));

  const ExtendResult l1 = extend_to_measurable(GaugeNormSpec::lp(1.0), marked, 1e9);
  const ExtendResult l2 = extend_to_measurable(GaugeNormSpec::lp(2.0), marked, 1e9);
  CHECK_FALSE(l1.stabilized);  // the marker stands for a value past every cap
  CHECK_FALSE(l2.stabilized);
  CHECK(l2.trajectory.back().second > l2.trajectory.front().second);
}

TEST_CASE("square-singularity values grow across grids while the mean settles") {
  double prev_l1 = 0.0, prev_l2 = 0.0;
  for (std::size_t n : {std::size_t{1024}, std::size_t{4096}, std::size_t{16384}}) {
    const Grid g = Grid::make(n);
    const CircleFunction f = sqrt_singularity(g, cplx{0.0, 0.0});
    const double l1 = evaluate(GaugeNormSpec::lp(1.0), f);
    const double l2 = evaluate(GaugeNormSpec::lp(2.0), f);
    if (prev_l1 > 0.0) {
      CHECK(std::abs(l1 - prev_l1) < 0.03);  // converging quadrature
      CHECK(l2 > prev_l2 * 1.05);            // divergent sum keeps climbing
    }
    prev_l1 = l1;
    prev_l2 = l2;
  }
}

TEST_CASE("pairing reproduces orthonormality and respects duality") {
  const Grid g = Grid::make(64);
  const CircleFunction z = monomial(g, 1);
  const CircleFunction zbar = monomial(g, -1);
  CHECK(std::abs(pairing(z, zbar) - cplx{1.0, 0.0}) < 1e-13);
  CHECK(std::abs(pairing(z, z)) < 1e-13);
  CHECK_THROWS_AS(pairing(z, monomial(Grid::make(8), 1)), Error);

  oracle::Rng rng(13);
  const GaugeNormSpec lp2 = GaugeNormSpec::lp(2.0);
  for (int t = 0; t < 10; ++t) {
    const CircleFunction f =
        CircleFunction::from_samples(g, oracle::random_samples(rng, g.n, 0.0, 2.0));
    const CircleFunction h =
        CircleFunction::from_samples(g, oracle::random_samples(rng, g.n, 0.0, 2.0));
    const double bound =
        evaluate(lp2, f) * dual_norm(lp2, h, DualMethod::ClosedForm).value;
    CHECK(std::abs(pairing(f, h)) <= bound + 1e-9);
  }
}

TEST_CASE("non-finite samples are refused with a numeric-input error") {
  const Grid g = Grid::make(8);
  std::vector<cplx> s(8, cplx{1.0, 0.0});
  s[2] = cplx{std::numeric_limits<double>::quiet_NaN(), 0.0};
  const CircleFunction f = CircleFunction::from_samples(g, s);
  CHECK_THROWS_AS(evaluate(GaugeNormSpec::lp(2.0), f), Error);
}

TEST_CASE("gauge property: the norm sees only magnitudes") {
  oracle::Rng rng(14);
  const Grid g = Grid::make(128);
  const std::vector<cplx> s = oracle::random_samples(rng, g.n, 0.0, 3.0);
  const CircleFunction f = CircleFunction::from_samples(g, s);
  const CircleFunction m = modulus_of(f);
  for (const auto& [name, spec] : shipped_continuous_specs()) {
    INFO(name);
    CHECK(evaluate(spec, f) == evaluate(spec, m));  // same magnitude vector
  }
}

TEST_CASE("spec constructors reject malformed parameters") {
  CHECK_THROWS_AS(GaugeNormSpec::lp(0.5), Error);
  CHECK_THROWS_AS(GaugeNormSpec::weighted_lp_mix({0.5, -0.1}, {1.0, 2.0}), Error);
  CHECK_THROWS_AS(GaugeNormSpec::weighted_lp_mix({1.0}, {1.0, 2.0}), Error);
  CHECK_THROWS_AS(GaugeNormSpec::weighted_lp_mix({1.0, 1.0}, {1.0, 0.5}), Error);
  CHECK_THROWS_AS(GaugeNormSpec::lorentz(2.0, 0.0), Error);
  CHECK_THROWS_AS(GaugeNormSpec::lorentz_with_constant(2.0, 1.0, -1.0), Error);
}

}  // TEST_SUITE
