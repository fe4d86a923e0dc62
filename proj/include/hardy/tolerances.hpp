#pragma once

#include <cstddef>

// Central numeric policy. Every threshold that can influence a verdict lives
// here so reports can echo the exact values in effect.
namespace hardy::tol {

// Default working resolution; quoted tolerances are calibrated here.
inline constexpr std::size_t kDefaultGridSize = 4096;

// log(phi) is evaluated as log(max(phi, kLogFloor)).
inline constexpr double kLogFloor = 1e-12;

// A node with modulus below this counts toward the vanishing-set gate.
inline constexpr double kZeroThreshold = 1e-8;

// The gate fails when more than this fraction of nodes sit below the
// threshold: the modulus is treated as vanishing on a set of positive
// measure instead of being silently floored.
inline constexpr double kGateFraction = 1e-3;

// Pointwise quotients are not formed where the denominator modulus is
// below this; such nodes are filled from neighbors and counted.
inline constexpr double kDivisionGuard = 1e-10;

// "Analytic to tolerance": negative-frequency energy at most this fraction
// of total energy.
inline constexpr double kAnalyticTol = 1e-8;

// Outer factors must keep their negative-frequency energy below this.
inline constexpr double kOuterNegEnergy = 1e-9;

// Rank-revealing orthogonalization drop tolerance.
inline constexpr double kDropTol = 1e-10;

// A shifted window whose norm is below this fraction of the generator's
// total energy is all transform roundoff, not signal, and counts as a
// dropped column.
inline constexpr double kWindowFloor = 1e-12;

// Backward-shift distance below this (relative to the generator's L2 norm)
// classifies the subspace as doubly invariant.
inline constexpr double kTauDoubly = 1e-6;

// Support mask threshold, relative to max |f|.
inline constexpr double kMaskRel = 1e-8;

// Forward-shift distance must stay below this for any valid certificate,
// and the doubly-branch mask identity chi_E f = f is held to the same bar.
inline constexpr double kForwardDistanceTol = 1e-8;
inline constexpr double kMaskIdentityTol = 1e-8;

// Dual-norm ascent budget and convergence threshold (relative change of the
// running best value over one stall window).
inline constexpr std::size_t kAscentCap = 10000;
inline constexpr double kAscentTol = 1e-9;
inline constexpr std::size_t kAscentStallWindow = 200;

// Truncation sweep stabilization: relative increment over the last doubling.
inline constexpr double kExtendStabilize = 1e-8;
inline constexpr double kDefaultExtendCap = 1e12;

// Inputs closer to the unit circle than 1/n are refused by interior
// evaluation rather than answered inaccurately.
// (the bound itself depends on the grid, so only the policy lives here)

// Largest grid accepted by the dense dual-norm search.
inline constexpr std::size_t kBruteMaxGrid = 16;

// Degenerate-generator threshold on max |f|.
inline constexpr double kGeneratorFloor = 1e-12;

}  // namespace hardy::tol
