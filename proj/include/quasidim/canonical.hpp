#pragma once

// Canonical representation of a quasiline. Starting from eta with
// ||mu_eta|| = k:
//   step 1: alpha from the reflected field A, psi = eta o alpha^{-1}; psi is
//           conformal above the real axis and ||mu_psi|| <= 2k / (1 + k^2).
//   step 2: beta from B = sqrt of the (reflected) field of psi,
//           phi = psi o beta^{-1}; mu_phi(conj z) = -conj(mu_phi(z)) and
//           ||mu_phi|| <= k.
// alpha and beta have symmetric coefficients, so they preserve the real line
// and eta, psi, phi all map R onto the same curve.

#include "quasidim/solver.hpp"

namespace quasidim {

struct DecompositionOptions {
  SolverOptions solver;
  double tol = 1e-2;            ///< slack on every norm and symmetry bound
  bool enforce_bounds = true;   ///< throw ContractViolation when a bound fails
  std::size_t curve_points = 2001;
};

struct Step1Result {
  QcMap eta;
  QcMap alpha;
  QcMap psi;
  BeltramiField mu_psi;
  std::vector<std::uint8_t> mask;  ///< samples where mu_psi was recovered
};

struct Step2Result {
  QcMap beta;
  QcMap phi;
  BeltramiField mu_phi;
  std::vector<std::uint8_t> mask;
};

struct BoundsReport {
  double k = 0.0;
  double K = 1.0;
  double K_prime = 1.0;            ///< K^2, the eccentricity bound of psi
  double norm_psi_bound = 0.0;     ///< 2k / (1 + k^2)
  double norm_psi_achieved = 0.0;
  double upper_psi_achieved = 0.0; ///< sup |mu_psi| above the real axis
  double norm_phi_achieved = 0.0;
  double anti_residual = 0.0;
  double symm_residual = 0.0;
  double curve_distance = 0.0;
  double grid_step = 0.0;
};

struct DecompositionResult {
  QcMap eta, alpha, psi, beta, phi;
  BeltramiField mu_psi, mu_phi;
  BoundsReport report;
};

Step1Result step1(const BeltramiField& eta_mu, const DecompositionOptions& options = {});

/// psi_mu must vanish above the real axis within options.tol.
Step2Result step2(const QcMap& psi, const BeltramiField& psi_mu,
                  std::span<const std::uint8_t> psi_mask, const DecompositionOptions& options = {});

DecompositionResult decompose(const BeltramiField& eta_mu, const DecompositionOptions& options = {});

/// Largest pairwise Hausdorff distance between the images of [0,1] under eta, psi, phi.
double verify_same_quasiline(const DecompositionResult& d, std::size_t n_points);

/// Symmetric Hausdorff distance between two polylines.
double hausdorff_distance(const Curve& a, const Curve& b);

/// Upper bound 2k / (1 + k^2) on the norm of psi.
double psi_norm_bound(double k);

}  // namespace quasidim
