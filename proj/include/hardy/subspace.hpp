#pragma once

#include "hardy/factorization.hpp"
#include "hardy/gauge_norm.hpp"
#include "hardy/grid.hpp"

namespace hardy {

// Finite truncation of the smallest closed shift-invariant subspace
// containing the generators: the span of {z^i f : 0 <= i <= n_basis},
// orthonormalized inside the truncated Fourier window |k| <= m_trunc.
struct SubspaceModel {
  std::size_t grid_n = 0;
  std::size_t n_basis = 0;
  std::size_t m_trunc = 0;
  std::size_t window = 0;  // 2*m_trunc + 1 coefficients, k = -m_trunc..m_trunc
  std::vector<std::vector<cplx>> basis;  // orthonormal columns (window-sized)
  double conditioning = 0.0;   // smallest retained singular value of R
  std::size_t dropped = 0;     // columns removed by the rank gate
  double truncation_loss = 0.0;  // worst energy fraction lost to the window
};

SubspaceModel build_cyclic_subspace(const CircleFunction& f, std::size_t n_basis,
                                    std::size_t m_trunc);
// Multi-generator extension: the joint span of {z^i f_g} over all generators.
SubspaceModel build_cyclic_subspace(const std::vector<CircleFunction>& generators,
                                    std::size_t n_basis, std::size_t m_trunc);

// l2 distance, inside the truncation window, from g to its projection onto
// the model.
double distance_to_subspace(const CircleFunction& g, const SubspaceModel& model);

struct ClassifyParams {
  std::size_t n_basis = 64;
  std::size_t m_trunc = 1024;
  double tau_doubly = tol::kTauDoubly;  // relative to the generator's L2 norm
};

enum class Verdict { SimplyInvariant, DoublyInvariant };

struct Certificate {
  double dist_backward = 0.0;  // distance of conj(z) f to the model (f L2-normalized)
  double dist_forward = 0.0;   // distance of z f  (forward invariance check)
  double phi_unimodularity = 0.0;      // simply branch: max ||phi| - 1|
  double regeneration_residual = 0.0;  // simply: ||f - phi P+(conj(phi) f)||_2
                                       // doubly: max |chi_E f - f|
  LogIntegrability log_report;
  double margin = 0.0;  // dist/tau (simply) or tau/dist (doubly)
};

struct Classification {
  Verdict verdict = Verdict::SimplyInvariant;
  std::vector<bool> e_mask;  // doubly branch: |f| above the mask threshold
  CircleFunction phi;        // simply branch: f / outer(|f|), unimodular
  Certificate certificate;
  ClassifyParams params;
};

// Invariance dichotomy decision for the cyclic subspace generated by f. The
// backward-shift distance decides the branch; the log-integrability gate
// cross-checks it, and disagreement raises an inconsistent-cross-check
// error instead of silently picking a side.
Classification classify(const CircleFunction& f, const GaugeNormSpec& spec,
                        const ClassifyParams& params = {});

struct CertificateVerification {
  bool pass = false;
  double forward_distance = 0.0;
  double backward_distance = 0.0;
  double mask_identity_error = 0.0;   // doubly: max |chi_E f - f|
  double phi_unimodularity = 0.0;     // simply
  double phi_negative_fraction = 0.0; // simply, for analytic generators
  bool strict_inclusion = false;      // simply: backward distance > 10 tau
  std::vector<std::string> failures;
};

// Recomputes the certificate evidence from scratch (fresh model, fresh
// distances) and checks it against the claimed verdict.
CertificateVerification verify_certificate(const Classification& c,
                                           const CircleFunction& f,
                                           const GaugeNormSpec& spec);

struct ApproximationStage {
  CircleFunction bounded;
  double alpha_error = 0.0;
  std::size_t degree = 0;
};

// Bounded approximants of f: with k = 1/(|f|+1) factorized as k = w h, the
// Fejer means of 1/h multiplied back by h f give bounded functions whose
// alpha-distance to f decreases through the stages.
std::vector<ApproximationStage> bounded_approximation(const CircleFunction& f,
                                                      const GaugeNormSpec& spec,
                                                      std::size_t stages);

}  // namespace hardy
