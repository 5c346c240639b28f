#pragma once

// Beltrami coefficients and infinitesimal ellipse fields on a GridSpec.
//
// An ellipse field M stores, per sample, the eccentricity e >= 1 and the
// major-axis direction theta in [0, pi) of the locus {v : |v + conj(v) mu| = 1}.
// For mu = t e^{i a} the major axis lies at theta = a/2 + pi/2 (mod pi) and
// e = (1 + t)/(1 - t).

#include "quasidim/grid.hpp"

#include <cstdint>
#include <span>
#include <vector>

namespace quasidim {

double k_to_K(double k);
double K_to_k(double K);

class BeltramiField {
 public:
  /// Throws InvalidArgument if any |mu| >= 1 or the sample count mismatches.
  BeltramiField(GridSpec grid, std::vector<cplx> values);

  /// Identically zero coefficient.
  static BeltramiField zero(const GridSpec& grid);

  const GridSpec& grid() const { return grid_; }
  std::span<const cplx> values() const { return values_; }
  cplx at(std::size_t row, std::size_t col) const { return values_[grid_.index(row, col)]; }
  cplx operator[](std::size_t idx) const { return values_[idx]; }

  /// sup |mu| over the samples, recomputed on construction.
  double norm_bound() const { return norm_; }
  double k() const { return norm_; }
  double K() const { return k_to_K(norm_); }

 private:
  GridSpec grid_;
  std::vector<cplx> values_;
  double norm_ = 0.0;
};

class EllipseField {
 public:
  EllipseField(GridSpec grid, std::vector<double> eccentricity, std::vector<double> orientation);

  const GridSpec& grid() const { return grid_; }
  std::span<const double> eccentricity() const { return ecc_; }
  std::span<const double> orientation() const { return theta_; }
  double eccentricity(std::size_t idx) const { return ecc_[idx]; }
  double orientation(std::size_t idx) const { return theta_[idx]; }

  /// ||M||: supremum of the eccentricities.
  double sup_eccentricity() const;

 private:
  GridSpec grid_;
  std::vector<double> ecc_;
  std::vector<double> theta_;
};

/// Pointwise ellipse of a coefficient value.
struct Ellipse {
  double eccentricity = 1.0;
  double orientation = 0.0;
};
Ellipse ellipse_of(cplx mu);
cplx mu_of(Ellipse e);

EllipseField mu_to_ellipse(const BeltramiField& f);
BeltramiField ellipse_to_mu(const EllipseField& e);

/// Same alignment, eccentricity replaced by its square root.
EllipseField sqrt_ellipse(const EllipseField& e);
/// Every ellipse rotated by pi/2; negates mu.
EllipseField rotate90(const EllipseField& e);
/// Field reflected through the real axis: M'(z) = conj(M(conj z)).
EllipseField conjugate_field(const EllipseField& e);

/// A(z) = N(z) above the real axis, conj(N(conj z)) below.
EllipseField build_A(const EllipseField& n);

/// B(z) = sqrt(M(z)) below the real axis, sqrt(conj(M(conj z))) above.
/// M must be circular above the axis: eccentricity - 1 <= circle_tol there.
EllipseField build_B(const EllipseField& m, double circle_tol = 1e-9);

struct SymmetryResiduals {
  double anti = 0.0;  ///< sup |mu(conj z) + conj(mu(z))|
  double symm = 0.0;  ///< sup |mu(conj z) - conj(mu(z))|
};
SymmetryResiduals symmetry_residuals(const BeltramiField& f);

/// Residuals restricted to sample pairs where mask is set at both z and conj z.
SymmetryResiduals symmetry_residuals(const BeltramiField& f, std::span<const std::uint8_t> mask);

}  // namespace quasidim
