#pragma once

// Beltrami equation solver. For a compactly supported mu, the map
//   phi = z + C[h] + (corrections),   h = dbar(phi)
// is found from the Neumann iteration h <- mu * (1 + S h), with S the
// Beurling transform and C the Cauchy transform applied spectrally on the
// periodized grid. The mean of h, which a periodic antiderivative cannot
// represent, is carried by an explicit conj(z) term; together with the
// constant term this gives phi(z) = z + O(1/z) for the periodized kernel.

#include "quasidim/field.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace quasidim {

enum class Normalization : std::uint8_t { fix_0_1_inf = 0, hydrodynamic = 1 };

/// Discrete quasiconformal map: images of the grid samples. Non-finite
/// samples mark points where the map is undefined (e.g. outside the image
/// of a composed inverse).
class QcMap {
 public:
  QcMap(GridSpec grid, std::vector<cplx> values, Normalization normalization, double residual);

  const GridSpec& grid() const { return grid_; }
  std::span<const cplx> values() const { return values_; }
  cplx at(std::size_t row, std::size_t col) const { return values_[grid_.index(row, col)]; }
  Normalization normalization() const { return normalization_; }
  /// sup |dbar phi - mu d phi| reported by the producer; NaN when not a solver output.
  double residual() const { return residual_; }

  /// Bilinear evaluation off-grid.
  cplx operator()(cplx z) const;

 private:
  GridSpec grid_;
  std::vector<cplx> values_;
  Normalization normalization_;
  double residual_;
};

struct Curve {
  std::vector<cplx> points;
  std::string source;

  /// Throws InvalidArgument unless there are >= 2 finite points.
  void validate() const;
};

struct SolverOptions {
  double tol = 1e-10;         ///< sup-norm increment at which the iteration stops
  int max_iter = 2000;
  double residual_acceptance = 1e-6;  ///< scaled by 1/(1 - ||mu||)
};

struct SolveStats {
  int iterations = 0;
  std::vector<double> increments;  ///< grid-L2 norm of h_{m+1} - h_m
  double residual = 0.0;
};

struct SolveResult {
  QcMap map;
  SolveStats stats;
};

/// Hydrodynamically normalized solution. Throws ConvergenceError.
SolveResult solve_detailed(const BeltramiField& mu, const SolverOptions& options = {});
QcMap solve(const BeltramiField& mu, const SolverOptions& options = {});

/// Post-composes the affine map fixing 0 and 1.
QcMap renormalize_036(const QcMap& m);

/// Solve followed by renormalize_036.
QcMap solve_normalized(const BeltramiField& mu, const SolverOptions& options = {});

/// Samples whose central-difference stencil is on the grid and finite.
std::vector<std::uint8_t> interior_mask(const QcMap& m);

/// mu = dbar phi / d phi by central differences; zero where the stencil is
/// unavailable (see interior_mask).
BeltramiField beltrami_of_map(const QcMap& m);

/// Images of n_points equispaced samples of [0, 1].
Curve map_line(const QcMap& m, std::size_t n_points);

}  // namespace quasidim
