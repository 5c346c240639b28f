#include "quasidim/solver.hpp"

#include "quasidim/error.hpp"
#include "quasidim/interp.hpp"
#include "quasidim/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <memory>
#include <sstream>

namespace quasidim {

namespace {

bool finite(cplx z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

}  // namespace

QcMap::QcMap(GridSpec grid, std::vector<cplx> values, Normalization normalization, double residual)
    : grid_(grid), values_(std::move(values)), normalization_(normalization), residual_(residual) {
  grid_.validate();
  if (values_.size() != grid_.size()) throw InvalidArgument("QcMap: sample count does not match grid");
}

cplx QcMap::operator()(cplx z) const {
  const cplx w = bilinear(grid_, values_, z);
  if (!finite(w)) {
    std::ostringstream msg;
    msg << "map undefined near " << z;
    throw OutOfGrid(msg.str());
  }
  return w;
}

void Curve::validate() const {
  if (points.size() < 2) throw InvalidArgument("curve needs at least two points");
  for (const cplx& p : points) {
    if (!finite(p)) throw InvalidArgument("curve has a non-finite point");
  }
}

SolveResult solve_detailed(const BeltramiField& mu, const SolverOptions& options) {
  const GridSpec& g = mu.grid();
  const std::size_t N = g.size();
  const double k = mu.norm_bound();
  const auto mu_v = mu.values();

  std::vector<cplx> h(mu_v.begin(), mu_v.end());
  std::vector<cplx> sh(N), next(N);
  SolveStats stats;

  std::unique_ptr<SpectralOperators> ops;
  if (k > 0.0) {
    ops = std::make_unique<SpectralOperators>(g);
    const double cell = g.step();
    for (;;) {
      if (stats.iterations >= options.max_iter) {
        std::ostringstream msg;
        msg << "Beltrami solver did not converge in " << options.max_iter
            << " iterations (||mu|| = " << k << ")";
        throw ConvergenceError(msg.str());
      }
      ops->beurling(h, sh);
      double sup = 0.0, l2 = 0.0;
      for (std::size_t i = 0; i < N; ++i) {
        next[i] = mu_v[i] * (1.0 + sh[i]);
        const double d = std::abs(next[i] - h[i]);
        sup = std::max(sup, d);
        l2 += d * d;
      }
      h.swap(next);
      ++stats.iterations;
      stats.increments.push_back(std::sqrt(l2) * cell);
      if (!std::isfinite(sup)) throw ConvergenceError("Beltrami solver diverged");
      if (sup <= options.tol) break;
    }
    ops->beurling(h, sh);
    for (std::size_t i = 0; i < N; ++i) {
      stats.residual = std::max(stats.residual, std::abs(h[i] - mu_v[i] * (1.0 + sh[i])));
    }
    const double accept = options.residual_acceptance / (1.0 - k);
    if (stats.residual > accept) {
      std::ostringstream msg;
      msg << "Beltrami residual " << stats.residual << " exceeds " << accept;
      throw ConvergenceError(msg.str());
    }
  }

  // phi = z + C[h] + mean(h) conj(z) - <conj(w) h(w)>
  std::vector<cplx> phi(N);
  if (ops) ops->cauchy(h, phi);
  cplx mean{}, moment{};
  for (std::size_t i = 0; i < N; ++i) {
    mean += h[i];
    moment += std::conj(g.point(i)) * h[i];
  }
  mean /= static_cast<double>(N);
  moment /= static_cast<double>(N);
  for (std::size_t i = 0; i < N; ++i) {
    const cplx z = g.point(i);
    phi[i] += z + mean * std::conj(z) - moment;
  }
  return {QcMap(g, std::move(phi), Normalization::hydrodynamic, stats.residual), std::move(stats)};
}

QcMap solve(const BeltramiField& mu, const SolverOptions& options) {
  return solve_detailed(mu, options).map;
}

QcMap renormalize_036(const QcMap& m) {
  const cplx a = m(0.0);
  const cplx b = m(1.0);
  const cplx d = b - a;
  if (std::abs(d) <= 1e-14 * std::max(1.0, std::abs(a))) {
    throw ContractViolation("renormalize_036: phi(0) == phi(1), map is degenerate");
  }
  std::vector<cplx> v(m.values().begin(), m.values().end());
  for (cplx& w : v) w = (w - a) / d;
  return QcMap(m.grid(), std::move(v), Normalization::fix_0_1_inf, m.residual());
}

QcMap solve_normalized(const BeltramiField& mu, const SolverOptions& options) {
  return renormalize_036(solve(mu, options));
}

std::vector<std::uint8_t> interior_mask(const QcMap& m) {
  const GridSpec& g = m.grid();
  std::vector<std::uint8_t> mask(g.size(), 0);
  const auto v = m.values();
  for (std::size_t r = 1; r + 1 < g.n; ++r) {
    for (std::size_t c = 1; c + 1 < g.n; ++c) {
      mask[g.index(r, c)] = finite(v[g.index(r, c)]) && finite(v[g.index(r, c - 1)]) &&
                            finite(v[g.index(r, c + 1)]) && finite(v[g.index(r - 1, c)]) &&
                            finite(v[g.index(r + 1, c)]);
    }
  }
  return mask;
}

BeltramiField beltrami_of_map(const QcMap& m) {
  const GridSpec& g = m.grid();
  const auto v = m.values();
  const auto mask = interior_mask(m);
  const double inv2h = 1.0 / (2.0 * g.step());
  const cplx I{0.0, 1.0};
  std::vector<cplx> mu(g.size(), cplx{});
  for (std::size_t r = 1; r + 1 < g.n; ++r) {
    for (std::size_t c = 1; c + 1 < g.n; ++c) {
      const std::size_t i = g.index(r, c);
      if (!mask[i]) continue;
      const cplx fx = (v[g.index(r, c + 1)] - v[g.index(r, c - 1)]) * inv2h;
      const cplx fy = (v[g.index(r + 1, c)] - v[g.index(r - 1, c)]) * inv2h;
      const cplx dz = 0.5 * (fx - I * fy);
      const cplx dzbar = 0.5 * (fx + I * fy);
      if (std::abs(dz) <= 1e-14 * (std::abs(fx) + std::abs(fy) + 1e-300)) {
        std::ostringstream msg;
        msg << "beltrami_of_map: d phi vanishes at row " << r << ", col " << c;
        throw ContractViolation(msg.str());
      }
      mu[i] = dzbar / dz;
    }
  }
  return BeltramiField(g, std::move(mu));
}

Curve map_line(const QcMap& m, std::size_t n_points) {
  if (n_points < 2) throw InvalidArgument("map_line needs n_points >= 2");
  Curve c;
  c.points.reserve(n_points);
  const double denom = static_cast<double>(n_points - 1);
  for (std::size_t i = 0; i < n_points; ++i) {
    c.points.push_back(m(static_cast<double>(i) / denom));
  }
  c.source = "image of [0,1]";
  return c;
}

}  // namespace quasidim
