#include "quasidim/field.hpp"

#include "quasidim/error.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

namespace quasidim {

namespace {

constexpr double kPi = std::numbers::pi;

void require_symmetric(const GridSpec& g, const char* what) {
  if (!g.conjugation_symmetric()) {
    throw InvalidArgument(std::string(what) + ": grid is not symmetric under z -> conj(z)");
  }
}

double wrap_pi(double theta) {
  theta = std::fmod(theta, kPi);
  if (theta < 0.0) theta += kPi;
  if (theta >= kPi) theta -= kPi;
  return theta;
}

Ellipse conj_ellipse(Ellipse e) { return {e.eccentricity, wrap_pi(kPi - e.orientation)}; }

Ellipse sqrt_of(Ellipse e) { return {std::sqrt(e.eccentricity), e.orientation}; }

}  // namespace

double k_to_K(double k) {
  if (!(k >= 0.0 && k < 1.0)) throw InvalidArgument("k must lie in [0, 1)");
  return (1.0 + k) / (1.0 - k);
}

double K_to_k(double K) {
  if (!(K >= 1.0) || !std::isfinite(K)) throw InvalidArgument("K must be finite and >= 1");
  return (K - 1.0) / (K + 1.0);
}

BeltramiField::BeltramiField(GridSpec grid, std::vector<cplx> values)
    : grid_(grid), values_(std::move(values)) {
  grid_.validate();
  if (values_.size() != grid_.size()) {
    throw InvalidArgument("Beltrami field: expected " + std::to_string(grid_.size()) +
                          " samples, got " + std::to_string(values_.size()));
  }
  for (std::size_t i = 0; i < values_.size(); ++i) {
    const double a = std::abs(values_[i]);
    if (!(a < 1.0)) {
      throw InvalidArgument("Beltrami field: |mu| >= 1 at row " + std::to_string(i / grid_.n) +
                            ", col " + std::to_string(i % grid_.n));
    }
    norm_ = std::max(norm_, a);
  }
}

BeltramiField BeltramiField::zero(const GridSpec& grid) {
  return BeltramiField(grid, std::vector<cplx>(grid.size(), cplx{}));
}

EllipseField::EllipseField(GridSpec grid, std::vector<double> eccentricity,
                           std::vector<double> orientation)
    : grid_(grid), ecc_(std::move(eccentricity)), theta_(std::move(orientation)) {
  grid_.validate();
  if (ecc_.size() != grid_.size() || theta_.size() != grid_.size()) {
    throw InvalidArgument("ellipse field: sample count does not match grid");
  }
  for (std::size_t i = 0; i < ecc_.size(); ++i) {
    if (!(ecc_[i] >= 1.0) || !std::isfinite(ecc_[i])) {
      throw InvalidArgument("ellipse field: eccentricity must be finite and >= 1");
    }
    if (!(theta_[i] >= 0.0 && theta_[i] < kPi)) {
      throw InvalidArgument("ellipse field: orientation must lie in [0, pi)");
    }
  }
}

double EllipseField::sup_eccentricity() const { return *std::max_element(ecc_.begin(), ecc_.end()); }

Ellipse ellipse_of(cplx mu) {
  const double t = std::abs(mu);
  if (!(t < 1.0)) throw InvalidArgument("|mu| must be < 1");
  if (t == 0.0) return {1.0, 0.0};
  return {(1.0 + t) / (1.0 - t), wrap_pi(0.5 * std::arg(mu) + 0.5 * kPi)};
}

cplx mu_of(Ellipse e) {
  const double t = (e.eccentricity - 1.0) / (e.eccentricity + 1.0);
  if (t == 0.0) return {};
  // arg mu = 2 theta - pi
  return -std::polar(t, 2.0 * e.orientation);
}

EllipseField mu_to_ellipse(const BeltramiField& f) {
  const auto& g = f.grid();
  std::vector<double> ecc(g.size()), theta(g.size());
  for (std::size_t i = 0; i < g.size(); ++i) {
    const Ellipse e = ellipse_of(f[i]);
    ecc[i] = e.eccentricity;
    theta[i] = e.orientation;
  }
  return EllipseField(g, std::move(ecc), std::move(theta));
}

BeltramiField ellipse_to_mu(const EllipseField& e) {
  const auto& g = e.grid();
  std::vector<cplx> mu(g.size());
  for (std::size_t i = 0; i < g.size(); ++i) mu[i] = mu_of({e.eccentricity(i), e.orientation(i)});
  return BeltramiField(g, std::move(mu));
}

EllipseField sqrt_ellipse(const EllipseField& e) {
  std::vector<double> ecc(e.eccentricity().begin(), e.eccentricity().end());
  for (double& x : ecc) x = std::sqrt(x);
  return EllipseField(e.grid(), std::move(ecc), {e.orientation().begin(), e.orientation().end()});
}

EllipseField rotate90(const EllipseField& e) {
  std::vector<double> theta(e.orientation().begin(), e.orientation().end());
  for (double& t : theta) t = wrap_pi(t + 0.5 * kPi);
  return EllipseField(e.grid(), {e.eccentricity().begin(), e.eccentricity().end()}, std::move(theta));
}

EllipseField conjugate_field(const EllipseField& e) {
  const auto& g = e.grid();
  require_symmetric(g, "conjugate_field");
  std::vector<double> ecc(g.size()), theta(g.size());
  for (std::size_t r = 0; r < g.n; ++r) {
    for (std::size_t c = 0; c < g.n; ++c) {
      const std::size_t src = g.index(g.mirror_row(r), c);
      const Ellipse m = conj_ellipse({e.eccentricity(src), e.orientation(src)});
      ecc[g.index(r, c)] = m.eccentricity;
      theta[g.index(r, c)] = m.orientation;
    }
  }
  return EllipseField(g, std::move(ecc), std::move(theta));
}

EllipseField build_A(const EllipseField& n) {
  const auto& g = n.grid();
  require_symmetric(g, "build_A");
  std::vector<double> ecc(g.size()), theta(g.size());
  for (std::size_t r = 0; r < g.n; ++r) {
    for (std::size_t c = 0; c < g.n; ++c) {
      const std::size_t dst = g.index(r, c);
      Ellipse m;
      if (g.upper_row(r)) {
        m = {n.eccentricity(dst), n.orientation(dst)};
      } else {
        const std::size_t src = g.index(g.mirror_row(r), c);
        m = conj_ellipse({n.eccentricity(src), n.orientation(src)});
      }
      ecc[dst] = m.eccentricity;
      theta[dst] = m.orientation;
    }
  }
  return EllipseField(g, std::move(ecc), std::move(theta));
}

EllipseField build_B(const EllipseField& m, double circle_tol) {
  const auto& g = m.grid();
  require_symmetric(g, "build_B");
  for (std::size_t r = g.n / 2; r < g.n; ++r) {
    for (std::size_t c = 0; c < g.n; ++c) {
      const double e = m.eccentricity(g.index(r, c));
      if (e - 1.0 > circle_tol) {
        throw ContractViolation("build_B: ellipse field is not circular above the real axis (row " +
                                std::to_string(r) + ", col " + std::to_string(c) +
                                ", eccentricity " + std::to_string(e) + ")");
      }
    }
  }
  std::vector<double> ecc(g.size()), theta(g.size());
  for (std::size_t r = 0; r < g.n; ++r) {
    for (std::size_t c = 0; c < g.n; ++c) {
      const std::size_t dst = g.index(r, c);
      Ellipse b;
      if (g.upper_row(r)) {
        const std::size_t src = g.index(g.mirror_row(r), c);
        b = sqrt_of(conj_ellipse({m.eccentricity(src), m.orientation(src)}));
      } else {
        b = sqrt_of({m.eccentricity(dst), m.orientation(dst)});
      }
      ecc[dst] = b.eccentricity;
      theta[dst] = b.orientation;
    }
  }
  return EllipseField(g, std::move(ecc), std::move(theta));
}

SymmetryResiduals symmetry_residuals(const BeltramiField& f) {
  return symmetry_residuals(f, {});
}

SymmetryResiduals symmetry_residuals(const BeltramiField& f, std::span<const std::uint8_t> mask) {
  const auto& g = f.grid();
  require_symmetric(g, "symmetry_residuals");
  if (!mask.empty() && mask.size() != g.size()) throw InvalidArgument("symmetry mask size mismatch");
  SymmetryResiduals out;
  for (std::size_t r = 0; r < g.n; ++r) {
    for (std::size_t c = 0; c < g.n; ++c) {
      const std::size_t i = g.index(r, c);
      const std::size_t j = g.index(g.mirror_row(r), c);
      if (!mask.empty() && !(mask[i] && mask[j])) continue;
      const cplx a = f[j];
      const cplx b = std::conj(f[i]);
      out.anti = std::max(out.anti, std::abs(a + b));
      out.symm = std::max(out.symm, std::abs(a - b));
    }
  }
  return out;
}

}  // namespace quasidim
