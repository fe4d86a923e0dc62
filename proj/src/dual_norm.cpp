#include <algorithm>
#include <cmath>
#include <numeric>

#include "hardy/gauge_norm.hpp"
#include "hardy/parallel.hpp"
#include "internal.hpp"

// The dual value alpha'(f) = sup { (1/n) sum |f_j| h_j : h >= 0, alpha(h) <= 1 }.
// By the gauge property the supremum runs over nonnegative h aligned with |f|,
// which turns the problem into concave maximization over the alpha unit ball
// restricted to the positive orthant.
//
// The ascent method is a two-phase search:
//   1. a level-set scan over scaled indicators of the top-k magnitude sets
//      (these are the extreme points that matter for rearrangement-invariant
//      norms; for ordered-weighted norms such as Lorentz(2,1) the scan alone
//      is already exact), then
//   2. multiplicative-weights refinement steered by a tie-averaged
//      subgradient of alpha, tracking the best value seen.
// Every candidate is rescaled to the ball boundary before its pairing value
// is taken, so each value is a certified lower bound and the running best is
// monotone.

namespace hardy {

namespace {

double closed_lp_dual(double p, const std::vector<double>& a) {
  const std::size_t n = a.size();
  if (p == 1.0) {
    return blocked_max_abs(a.data(), n);
  }
  const double q = p / (p - 1.0);
  const double s = blocked_reduce<double>(
      n, [&](std::size_t j) { return std::pow(a[j], q); });
  return std::pow(s / static_cast<double>(n), 1.0 / q);
}

// Raw closed-form indicator functional (no normalization) for top-k sets.
double raw_indicator(const GaugeNormSpec& spec, std::size_t k, std::size_t n) {
  const double frac = static_cast<double>(k) / static_cast<double>(n);
  switch (spec.variant()) {
    case GaugeNormSpec::Variant::Lp:
      return std::pow(frac, 1.0 / spec.p());
    case GaugeNormSpec::Variant::WeightedLpMix: {
      double acc = 0.0;
      for (std::size_t i = 0; i < spec.weights().size(); ++i) {
        acc += spec.weights()[i] * std::pow(frac, 1.0 / spec.exponents()[i]);
      }
      return acc;
    }
    case GaugeNormSpec::Variant::Lorentz:
      return std::pow(frac, 1.0 / spec.p());
    case GaugeNormSpec::Variant::Orlicz:
      return 1.0 / spec.young().inverse(1.0 / frac);
    case GaugeNormSpec::Variant::LInfinity:
      return 1.0;
  }
  return 1.0;
}

struct Scan {
  double best = 0.0;
  std::vector<std::size_t> order;  // indices by decreasing magnitude
};

// Candidates h_k = chi(top-k)/alpha(chi). k < n uses the closed-form raw
// value; k = n goes through the real evaluator so the full-support candidate
// is consistent with evaluate() to the last bit (this is what pins the dual
// of the constant 1 at exactly 1).
Scan levelset_scan(const GaugeNormSpec& spec, const std::vector<double>& a) {
  const std::size_t n = a.size();
  Scan scan;
  scan.order.resize(n);
  std::iota(scan.order.begin(), scan.order.end(), std::size_t{0});
  std::sort(scan.order.begin(), scan.order.end(), [&](std::size_t i, std::size_t j) {
    if (a[i] != a[j]) return a[i] > a[j];
    return i < j;
  });
  const double normalizer = spec.normalization_override()
                                ? *spec.normalization_override()
                                : spec.raw_of_ones(n);
  double cum = 0.0;
  for (std::size_t k = 1; k <= n; ++k) {
    cum += a[scan.order[k - 1]];
    double alpha_k;
    if (k == n) {
      alpha_k = evaluate_magnitudes(spec, std::vector<double>(n, 1.0));
    } else {
      alpha_k = raw_indicator(spec, k, n) / normalizer;
    }
    if (alpha_k > 0.0) {
      scan.best = std::max(scan.best, (cum / static_cast<double>(n)) / alpha_k);
    }
  }
  return scan;
}

// Subgradient of the raw functional at d > 0, up to a uniform positive
// factor (the multiplicative-weights update is invariant under one).
std::vector<double> subgradient(const GaugeNormSpec& spec,
                                const std::vector<double>& d) {
  const std::size_t n = d.size();
  std::vector<double> g(n, 0.0);
  switch (spec.variant()) {
    case GaugeNormSpec::Variant::Lp: {
      const double p = spec.p();
      for (std::size_t j = 0; j < n; ++j) {
        g[j] = p == 1.0 ? 1.0 : std::pow(std::max(d[j], 1e-300), p - 1.0);
      }
      break;
    }
    case GaugeNormSpec::Variant::WeightedLpMix: {
      for (std::size_t i = 0; i < spec.weights().size(); ++i) {
        const double p = spec.exponents()[i];
        const double s = blocked_reduce<double>(
            n, [&](std::size_t j) { return std::pow(d[j], p); });
        const double norm_p = std::pow(s / static_cast<double>(n), 1.0 / p);
        if (norm_p <= 0.0) continue;
        const double lead = spec.weights()[i] * std::pow(norm_p, 1.0 - p);
        for (std::size_t j = 0; j < n; ++j) {
          g[j] += lead * (p == 1.0 ? 1.0 : std::pow(std::max(d[j], 1e-300), p - 1.0));
        }
      }
      break;
    }
    case GaugeNormSpec::Variant::Lorentz: {
      const double p = spec.p(), q = spec.q();
      std::vector<std::size_t> order(n);
      std::iota(order.begin(), order.end(), std::size_t{0});
      std::sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) {
        if (d[i] != d[j]) return d[i] > d[j];
        return i < j;
      });
      std::vector<double> layer(n);
      double t_prev = 0.0;
      for (std::size_t i = 0; i < n; ++i) {
        const double t_next =
            std::pow(static_cast<double>(i + 1) / static_cast<double>(n), q / p);
        layer[i] = t_next - t_prev;
        t_prev = t_next;
      }
      // Ranks holding (numerically) equal values share the mean layer
      // weight; without this the update flips between tied orderings and
      // the iteration oscillates instead of converging.
      std::size_t i = 0;
      while (i < n) {
        std::size_t j = i;
        const double head = d[order[i]];
        while (j + 1 < n &&
               std::abs(d[order[j + 1]] - head) <= 1e-12 * std::max(1.0, head)) {
          ++j;
        }
        double mean_layer = 0.0;
        for (std::size_t r = i; r <= j; ++r) mean_layer += layer[r];
        mean_layer /= static_cast<double>(j - i + 1);
        for (std::size_t r = i; r <= j; ++r) {
          const std::size_t idx = order[r];
          const double mag = std::max(d[idx], 1e-300);
          g[idx] = (q == 1.0 ? 1.0 : std::pow(mag, q - 1.0)) * mean_layer;
        }
        i = j + 1;
      }
      break;
    }
    case GaugeNormSpec::Variant::Orlicz: {
      const double lambda = spec.raw(d);
      if (lambda <= 0.0) break;
      const YoungTable& young = spec.young();
      for (std::size_t j = 0; j < n; ++j) {
        g[j] = young.right_slope(d[j] / lambda);
      }
      break;
    }
    case GaugeNormSpec::Variant::LInfinity:
      break;  // handled by the caller: the scan is already exact
  }
  return g;
}

}  // namespace

namespace detail {

DualResult dual_ascent(const GaugeNormSpec& spec,
                       const std::vector<double>& a, std::uint64_t iteration_cap,
                       std::uint64_t stall_window) {
  const std::size_t n = a.size();
  DualResult out;
  out.method = DualMethod::Ascent;

  double top = 0.0;
  for (double v : a) top = std::max(top, v);
  if (top == 0.0) return out;

  const Scan scan = levelset_scan(spec, a);
  double best = scan.best;

  const auto boundary_value = [&](const std::vector<double>& d) {
    const double alpha_d = evaluate_magnitudes(spec, d);
    if (alpha_d <= 0.0) return 0.0;
    const double dot =
        blocked_reduce<double>(n, [&](std::size_t j) { return a[j] * d[j]; });
    return (dot / static_cast<double>(n)) / alpha_d;
  };

  if (spec.variant() == GaugeNormSpec::Variant::LInfinity) {
    // sup over 0 <= h <= 1 of the mean of a*h is attained at h = 1; the
    // full-support scan candidate is that supremum.
    out.value = best;
    return out;
  }

  // Start the refinement at the aligned profile |f| itself.
  std::vector<double> d(n);
  for (std::size_t j = 0; j < n; ++j) d[j] = std::max(a[j], 1e-12 * top);
  best = std::max(best, boundary_value(d));

  const double eta = 0.5;
  double checkpoint = best;
  std::uint64_t since = 0;
  std::vector<double> next(n);
  for (std::uint64_t it = 0; it < iteration_cap; ++it) {
    const std::vector<double> g = subgradient(spec, d);
    double peak = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
      const double ratio = (a[j] / static_cast<double>(n)) / std::max(g[j], 1e-300);
      next[j] = d[j] * std::pow(ratio, eta);
      peak = std::max(peak, next[j]);
    }
    if (!(peak > 0.0) || !std::isfinite(peak)) {
      // Degenerate subgradient direction; no further progress is possible
      // from here, keep the certified best.
      out.value = best;
      out.iterations = it;
      count_ascent_iterations(it);
      return out;
    }
    for (std::size_t j = 0; j < n; ++j) d[j] = next[j] / peak;
    best = std::max(best, boundary_value(d));
    ++since;
    if (since >= stall_window) {
      if (best - checkpoint <= tol::kAscentTol * std::max(1.0, best)) {
        out.value = best;
        out.iterations = it + 1;
        count_ascent_iterations(it + 1);
        return out;
      }
      checkpoint = best;
      since = 0;
    }
  }
  count_ascent_iterations(iteration_cap);
  throw OptimizationError(
      "dual ascent did not settle within the iteration budget", best);
}

}  // namespace detail

namespace {

DualResult brute_small(const GaugeNormSpec& spec, const std::vector<double>& a) {
  const std::size_t n = a.size();
  if (n > tol::kBruteMaxGrid) {
    fail(ErrorCode::Resolution,
         "exhaustive dual search is limited to grids of size 16 or less");
  }
  DualResult out;
  out.method = DualMethod::BruteSmall;

  double top = 0.0;
  for (double v : a) top = std::max(top, v);
  if (top == 0.0) return out;

  const auto boundary_value = [&](const std::vector<double>& d) {
    const double alpha_d = evaluate_magnitudes(spec, d);
    if (alpha_d <= 0.0) return 0.0;
    double dot = 0.0;
    for (std::size_t j = 0; j < n; ++j) dot += a[j] * d[j];
    return (dot / static_cast<double>(n)) / alpha_d;
  };

  // Dense mesh over the simplex: all splits of `steps` units among n cells.
  const int steps = 8;
  std::vector<int> part(n, 0);
  std::vector<double> d(n, 0.0);
  std::vector<double> best_d(n, 0.0);
  double best = 0.0;
  // Iterate compositions in colex order.
  part[0] = steps;
  for (;;) {
    bool nonzero = false;
    for (std::size_t j = 0; j < n; ++j) {
      d[j] = static_cast<double>(part[j]);
      nonzero = nonzero || part[j] != 0;
    }
    if (nonzero) {
      const double v = boundary_value(d);
      if (v > best) {
        best = v;
        best_d = d;
      }
    }
    // next composition
    std::size_t i = 0;
    while (i + 1 < n && part[i] == 0) ++i;
    if (i + 1 >= n) break;
    const int carry = part[i];
    part[i] = 0;
    part[0] = carry - 1;
    part[i + 1] += 1;
  }

  // Coordinate refinement with a shrinking step.
  double scale = 1.0 / static_cast<double>(steps);
  for (int round = 0; round < 14; ++round) {
    scale *= 0.5;
    bool improved = true;
    int guard = 0;
    while (improved && guard++ < 200) {
      improved = false;
      for (std::size_t i = 0; i < n; ++i) {
        for (int s : {+1, -1}) {
          std::vector<double> trial = best_d;
          trial[i] = std::max(0.0, trial[i] + s * scale * static_cast<double>(steps));
          bool nonzero = false;
          for (double v : trial) nonzero = nonzero || v > 0.0;
          if (!nonzero) continue;
          const double v = boundary_value(trial);
          if (v > best * (1.0 + 1e-15)) {
            best = v;
            best_d = trial;
            improved = true;
          }
        }
      }
    }
  }
  out.value = best;
  return out;
}

}  // namespace

DualResult dual_norm(const GaugeNormSpec& spec, const CircleFunction& f,
                     DualMethod method) {
  const std::vector<double> a = magnitudes_of(f);
  for (double v : a) {
    if (!std::isfinite(v)) {
      fail(ErrorCode::NumericInput, "dual evaluation needs finite samples");
    }
  }
  switch (method) {
    case DualMethod::ClosedForm: {
      DualResult out;
      out.method = DualMethod::ClosedForm;
      if (spec.variant() == GaugeNormSpec::Variant::Lp) {
        out.value = closed_lp_dual(spec.p(), a);
      } else if (spec.variant() == GaugeNormSpec::Variant::LInfinity) {
        out.value = blocked_sum(a.data(), a.size()) / static_cast<double>(a.size());
      } else {
        fail(ErrorCode::UnsupportedNorm,
             "no closed-form dual for " + spec.describe());
      }
      return out;
    }
    case DualMethod::Ascent:
      return detail::dual_ascent(spec, a, tol::kAscentCap, tol::kAscentStallWindow);
    case DualMethod::BruteSmall:
      return brute_small(spec, a);
  }
  fail(ErrorCode::UnsupportedNorm, "unknown dual method");
}

}  // namespace hardy
