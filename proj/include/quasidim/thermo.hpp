#pragma once

// Covering sums over the images of the intervals [j/n, (j+1)/n] under a
// motion, with the entropy / Lyapunov exponent bookkeeping used to bound them:
//   r_j(lambda)  = phi_lambda(b_j) - phi_lambda(a_j)
//   I(nu)        = -sum nu_j log nu_j
//   L(nu,lambda) = -sum nu_j log |r_j(lambda)|
//   log sum |r_j|^p >= I(nu) - p L(nu,lambda), with equality at nu_j ~ |r_j|^p.

#include "quasidim/motion.hpp"

#include <cstdint>
#include <span>
#include <vector>

namespace quasidim {

class CoveringData {
 public:
  /// radii[l][j] = r_j(lambdas[l]). Throws ContractViolation when some
  /// |r_j| < 1e-14 (the map is not injective on the samples).
  CoveringData(std::vector<cplx> lambdas, std::vector<std::vector<cplx>> radii);

  std::size_t n() const { return n_; }
  const std::vector<cplx>& lambdas() const { return lambdas_; }
  std::size_t lambda_index(cplx lambda) const;
  std::span<const cplx> radii(cplx lambda) const { return radii_[lambda_index(lambda)]; }
  std::span<const cplx> radii_at(std::size_t l) const { return radii_[l]; }

 private:
  std::size_t n_ = 0;
  std::vector<cplx> lambdas_;
  std::vector<std::vector<cplx>> radii_;
};

CoveringData covering_from_family(const MotionFamily& family, std::size_t n);
CoveringData covering_from_map(const QcMap& map, cplx lambda, std::size_t n);

class Distribution {
 public:
  /// Nonnegative weights summing to 1 within 1e-12.
  explicit Distribution(std::vector<double> nu);

  static Distribution uniform(std::size_t n);
  static Distribution point_mass(std::size_t n, std::size_t j);
  /// Normalizes nonnegative weights with a positive sum.
  static Distribution from_weights(std::vector<double> w);

  std::size_t size() const { return nu_.size(); }
  std::span<const double> weights() const { return nu_; }
  double operator[](std::size_t j) const { return nu_[j]; }

 private:
  std::vector<double> nu_;
};

double covering_sum(const CoveringData& c, cplx lambda, double p);
/// log of covering_sum, evaluated stably.
double log_covering_sum(const CoveringData& c, cplx lambda, double p);
double entropy(const Distribution& nu);
double lyapunov(const CoveringData& c, const Distribution& nu, cplx lambda);
/// I(nu) - p L(nu, lambda).
double variational_value(const CoveringData& c, const Distribution& nu, cplx lambda, double p);
/// log sum |r_j|^p - (I(nu) - p L(nu, lambda)); nonnegative up to rounding.
double jensen_gap(const CoveringData& c, const Distribution& nu, cplx lambda, double p);
/// The maximizer nu_j = |r_j|^p / sum |r_i|^p.
Distribution gibbs(const CoveringData& c, cplx lambda, double p);

struct QuasisymmetryEstimate {
  double C = 1.0;
  double ratio_bound = 1.0;      ///< smallest C with |z-x| <= |y-x| => image ratio <= C
  double separation_bound = 1.0; ///< smallest C with C|z-x| <= |y-x| => image ratio >= 2
  std::size_t triples = 0;
};

/// Empirical quasisymmetry constant on [0,1], maximized over the family's
/// lambda samples. Throws InvalidArgument for samples < 100.
QuasisymmetryEstimate quasisymmetry_constant(const MotionFamily& family, std::size_t samples,
                                             std::uint64_t seed);

/// H(lambda) = 2 L(nu, lambda) - I(nu) + 3 log C.
double harnack_functional(const CoveringData& c, const Distribution& nu, double C, cplx lambda);

/// exponent 1 + k^2 / rho^2 used in the final covering estimate.
double covering_exponent_for(double k, double rho);

}  // namespace quasidim
