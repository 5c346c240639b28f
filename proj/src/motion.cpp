#include "quasidim/motion.hpp"

#include "quasidim/error.hpp"
#include "quasidim/parallel.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <optional>
#include <sstream>

namespace quasidim {

BeltramiField member_mu(const BeltramiField& base, double k, cplx lambda) {
  if (!(std::abs(lambda) < 1.0)) throw InvalidArgument("member_mu: |lambda| must be < 1");
  if (k == 0.0) {
    if (lambda != cplx{}) throw InvalidArgument("member_mu: k = 0 only admits lambda = 0");
    return BeltramiField::zero(base.grid());
  }
  if (!(k > 0.0 && k < 1.0)) throw InvalidArgument("member_mu: k must lie in (0, 1)");
  const cplx s = lambda / k;
  std::vector<cplx> v(base.values().begin(), base.values().end());
  for (cplx& z : v) z *= s;
  return BeltramiField(base.grid(), std::move(v));
}

std::size_t MotionFamily::index_of(cplx lambda) const {
  for (std::size_t i = 0; i < lambdas.size(); ++i) {
    if (std::abs(lambdas[i] - lambda) <= 1e-14) return i;
  }
  std::ostringstream msg;
  msg << "lambda " << lambda << " is not among the family samples";
  throw InvalidArgument(msg.str());
}

bool MotionFamily::contains(cplx lambda) const {
  return std::any_of(lambdas.begin(), lambdas.end(),
                     [&](cplx l) { return std::abs(l - lambda) <= 1e-14; });
}

MotionFamily build_family(const BeltramiField& base, double k, double rho, std::vector<cplx> lambdas,
                          const FamilyOptions& options) {
  if (!(rho > 0.0 && rho < 1.0)) throw InvalidArgument("build_family: rho must lie in (0, 1)");
  if (lambdas.empty()) throw InvalidArgument("build_family: no lambda samples");
  const double anti = symmetry_residuals(base).anti;
  if (anti > options.antisymmetry_tol) {
    std::ostringstream msg;
    msg << "build_family: base coefficient is not antisymmetric (residual " << anti << ")";
    throw InvalidArgument(msg.str());
  }
  for (const cplx l : lambdas) {
    if (std::abs(l) > rho) {
      std::ostringstream msg;
      msg << "build_family: |lambda| = " << std::abs(l) << " exceeds rho = " << rho;
      throw InvalidArgument(msg.str());
    }
  }

  std::vector<std::optional<QcMap>> solved(lambdas.size());
  parallel_for(lambdas.size(), [&](std::size_t i) {
    try {
      solved[i] = solve_normalized(member_mu(base, k, lambdas[i]), options.solver);
    } catch (const Error& e) {
      std::ostringstream msg;
      msg << "lambda = " << lambdas[i] << ": " << e.what();
      throw ConvergenceError(msg.str());
    }
  });

  MotionFamily f{base, k, rho, std::move(lambdas), {}, {}};
  for (auto& m : solved) {
    f.residuals.push_back(m->residual());
    f.maps.push_back(std::move(*m));
  }
  return f;
}

std::vector<cplx> default_lambdas(double k) {
  if (k == 0.0) return {0.0};
  return {0.0, k, -k, cplx{0.0, k}, cplx{0.0, -k}};
}

std::vector<cplx> lambda_circle(cplx center, double radius, std::size_t count) {
  std::vector<cplx> out;
  for (std::size_t j = 0; j < count; ++j) {
    out.push_back(center + std::polar(radius, 2.0 * std::numbers::pi * static_cast<double>(j) /
                                                  static_cast<double>(count)));
  }
  return out;
}

std::string to_string(LambdaKind kind) {
  switch (kind) {
    case LambdaKind::zero: return "zero";
    case LambdaKind::real: return "real";
    case LambdaKind::imaginary: return "imaginary";
    case LambdaKind::generic: return "generic";
  }
  return "?";
}

bool SymmetryReport::ok() const {
  return std::all_of(entries.begin(), entries.end(), [](const SymmetryEntry& e) { return e.ok; });
}

SymmetryReport check_symmetries(const MotionFamily& family) {
  const GridSpec& g = family.base_mu.grid();
  const double h = g.step();
  SymmetryReport rep;
  rep.grid_step = h;
  for (std::size_t i = 0; i < family.lambdas.size(); ++i) {
    const cplx l = family.lambdas[i];
    SymmetryEntry e;
    e.lambda = l;
    e.map_residual = std::numeric_limits<double>::quiet_NaN();
    if (l == cplx{}) {
      e.kind = LambdaKind::zero;
    } else if (l.imag() == 0.0) {
      e.kind = LambdaKind::real;
    } else if (l.real() == 0.0) {
      e.kind = LambdaKind::imaginary;
    }
    const QcMap& m = family.maps[i];
    const BeltramiField mu = member_mu(family.base_mu, family.k, l);
    const auto res = symmetry_residuals(mu);
    switch (e.kind) {
      case LambdaKind::zero: {
        double dev = 0.0;
        for (std::size_t j = 0; j < g.size(); ++j) dev = std::max(dev, std::abs(m.values()[j] - g.point(j)));
        e.mu_residual = std::max(res.anti, res.symm);
        e.map_residual = dev;
        e.ok = e.mu_residual == 0.0 && dev <= 10.0 * h;
        break;
      }
      case LambdaKind::real: {
        e.mu_residual = res.anti;
        e.ok = res.anti <= 1e-12;
        if (family.contains(-l)) {
          const QcMap& other = family.maps[family.index_of(-l)];
          double dev = 0.0;
          for (std::size_t r = 0; r < g.n; ++r)
            for (std::size_t c = 0; c < g.n; ++c)
              dev = std::max(dev, std::abs(m.at(r, c) - std::conj(other.at(g.mirror_row(r), c))));
          e.map_residual = dev;
          e.ok = e.ok && dev <= 10.0 * h;
        }
        break;
      }
      case LambdaKind::imaginary: {
        e.mu_residual = res.symm;
        double dev = 0.0;
        for (const cplx p : map_line(m, 257).points) dev = std::max(dev, std::abs(p.imag()));
        e.map_residual = dev;
        e.ok = res.symm <= 1e-12 && dev <= 5.0 * h;
        break;
      }
      case LambdaKind::generic:
        e.mu_residual = std::numeric_limits<double>::quiet_NaN();
        break;
    }
    rep.entries.push_back(e);
  }
  return rep;
}

}  // namespace quasidim
