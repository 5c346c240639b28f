#pragma once

// Positive harmonic functions on the unit disc given by a sampled boundary
// density d(theta_k), theta_k = 2 pi k / m. With c_j the discrete Fourier
// coefficients of d, the Poisson integral is Re F and the conjugate function
// is Im F for
//   F(z) = c_0 + 2 sum_{0 < j < m/2} c_j z^j,
// which is exact for densities band-limited below m/2.

#include "quasidim/grid.hpp"

#include <cstdint>
#include <functional>
#include <random>
#include <span>
#include <vector>

namespace quasidim {

class HarmonicFn {
 public:
  /// m must be a power of two >= 8 and the density nonnegative with a positive mean.
  explicit HarmonicFn(std::vector<double> density);

  std::span<const double> density() const { return density_; }
  std::size_t samples() const { return density_.size(); }
  /// c_0 .. c_{m/2-1}
  std::span<const cplx> coefficients() const { return coeffs_; }

  /// h(z); throws InvalidArgument for |z| > 0.999.
  double operator()(cplx z) const;
  /// h + i h~ with h~(0) = 0.
  cplx analytic(cplx z) const;

 private:
  std::vector<double> density_;
  std::vector<cplx> coeffs_;
};

/// h(z) by direct quadrature of the Poisson kernel (independent of the series).
double poisson_quadrature(const HarmonicFn& h, cplx z);

/// (d_x h + i d_y h)(0) = 2 conj(c_1).
cplx gradient_at_zero(const HarmonicFn& h);

/// Harmonic conjugate h~, normalized by h~(0) = 0.
class ConjugateFn {
 public:
  explicit ConjugateFn(const HarmonicFn& h) : h_(&h) {}
  double operator()(cplx z) const { return h_->analytic(z).imag(); }

 private:
  const HarmonicFn* h_;
};
ConjugateFn conjugate(const HarmonicFn& h);

/// (h(z) + h(z*)) / (2 h(0)) with z* the reflection across the line through 0
/// at angle `direction`.
HarmonicFn symmetrize(const HarmonicFn& h, double direction);

/// f(lambda) = (g - 1)/(g + 1), g = h(lambda) + i h~(lambda). Requires
/// h(0) = 1 and grad h(0) = 0 within 1e-10.
cplx schwarz_witness(const HarmonicFn& h, cplx lambda);

struct HarnackCheck {
  double h0 = 0.0;
  double h_lambda = 0.0;
  double lower_factor = 1.0;  ///< (1 - r^2)/(1 + r^2), or (1 - r)/(1 + r) for the classical form
  double upper_factor = 1.0;
  double lower_slack = 0.0;   ///< h0 - lower_factor * h_lambda
  double upper_slack = 0.0;   ///< upper_factor * h_lambda - h0
  bool holds = true;          ///< both slacks >= -tolerance
};

/// Two-sided bound with the squared factors, from the values alone.
HarnackCheck symmetric_bound(double h0, double h_lambda, double r, double tolerance = 1e-8);
/// Classical Harnack factors (1 -+ r)/(1 +- r).
HarnackCheck classical_bound(double h0, double h_lambda, double r, double tolerance = 1e-8);

/// Requires the derivative of h at 0 in the direction of lambda to vanish
/// within 1e-10 * h(0); throws InvalidArgument otherwise.
HarnackCheck verify_symmetric_harnack(const HarmonicFn& h, cplx lambda);

/// Random positive density 1 + sum_{j<=degree} a_j cos(j theta - p_j), with
/// the oscillating part scaled so that min density >= min_value.
std::vector<double> random_density(std::mt19937_64& rng, std::size_t m, int degree, double min_value);

struct CampaignOptions {
  std::size_t densities = 200;
  std::vector<double> radii{0.3, 0.6, 0.9};
  std::size_t samples = 4096;
  int degree = 8;
  std::uint64_t seed = 1;
  double harnack_slack = 1e-8;
  double schwarz_slack = 1e-6;
};

struct CampaignSummary {
  std::size_t densities = 0;
  std::size_t checks = 0;
  std::size_t violations = 0;
  std::size_t classical_violations = 0;
  std::size_t schwarz_violations = 0;
  double worst_lower_slack = 0.0;
  double worst_upper_slack = 0.0;
  double worst_schwarz_slack = 0.0;  ///< min over samples of |lambda|^2 - |f(lambda)|
  bool probe_failed_as_expected = false;
  std::uint64_t seed = 0;
  bool ok() const;
};

/// Runs the symmetric-Harnack campaign: for each density and radius, both
/// gradient-orthogonal lambdas are tested, plus the Schwarz witness of the
/// symmetrized function and the classical bound.
CampaignSummary run_harnack_campaign(const CampaignOptions& options);

/// Subharmonic u(z) = |z^2 - lambda^2|^2 + eps: grad u(0) = 0, yet u(lambda)
/// = eps is far below (1 - r^2)/(1 + r^2) u(0), so the upper slack is negative.
/// Returns the check (expected to fail).
HarnackCheck subharmonic_probe(cplx lambda, double eps = 1e-6);

}  // namespace quasidim
