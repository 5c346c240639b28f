#pragma once

// The holomorphic motion phi_lambda, |lambda| <= rho < 1, generated by an
// antisymmetric coefficient mu of norm k: mu_lambda = mu * lambda / k, each
// member normalized to fix 0, 1 and infinity. phi_0 = id and phi_k = phi.
// Real lambda keeps mu_lambda antisymmetric and gives
// phi_lambda(z) = conj(phi_{-lambda}(conj z)); imaginary lambda makes
// mu_lambda symmetric, so phi_lambda maps R to R.

#include "quasidim/solver.hpp"

#include <string>
#include <vector>

namespace quasidim {

BeltramiField member_mu(const BeltramiField& base, double k, cplx lambda);

struct MotionFamily {
  BeltramiField base_mu;
  double k = 0.0;
  double rho = 0.0;
  std::vector<cplx> lambdas;
  std::vector<QcMap> maps;
  std::vector<double> residuals;

  /// Index of lambda among the samples (|difference| <= 1e-14); throws InvalidArgument.
  std::size_t index_of(cplx lambda) const;
  bool contains(cplx lambda) const;
};

struct FamilyOptions {
  SolverOptions solver;
  double antisymmetry_tol = 1e-12;
};

MotionFamily build_family(const BeltramiField& base, double k, double rho, std::vector<cplx> lambdas,
                          const FamilyOptions& options = {});

/// {0, k, -k, ik, -ik}.
std::vector<cplx> default_lambdas(double k);
/// count points center + radius * exp(2 pi i j / count).
std::vector<cplx> lambda_circle(cplx center, double radius, std::size_t count);

enum class LambdaKind { zero, real, imaginary, generic };

struct SymmetryEntry {
  cplx lambda;
  LambdaKind kind = LambdaKind::generic;
  double mu_residual = 0.0;   ///< anti (real) or symm (imaginary) residual of mu_lambda
  double map_residual = 0.0;  ///< conjugation law (real) or sup |Im| on [0,1] (imaginary); NaN if not checked
  bool ok = true;
};

struct SymmetryReport {
  double grid_step = 0.0;
  std::vector<SymmetryEntry> entries;
  bool ok() const;
};

/// Real lambda: anti residual <= 1e-12 and, when -lambda is present, the
/// conjugation law within 10 grid steps. Imaginary lambda: symm residual
/// <= 1e-12 and |Im phi_lambda(x)| <= 5 grid steps for x in [0,1].
SymmetryReport check_symmetries(const MotionFamily& family);

std::string to_string(LambdaKind kind);

}  // namespace quasidim
