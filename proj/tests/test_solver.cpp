#include "support.hpp"

#include "quasidim/compose.hpp"
#include "quasidim/error.hpp"
#include "quasidim/generators.hpp"
#include "quasidim/solver.hpp"
#include "quasidim/spectral.hpp"

#include <doctest.h>

using namespace quasidim;

namespace {

// smooth field supported in |z - c| < R
BeltramiField smooth_mu(const GridSpec& g, cplx c, double R, cplx amp) {
  const auto b = smooth_bump(g, c, R);
  std::vector<cplx> v(g.size());
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = amp * b[i] * std::polar(1.0, 0.7 * g.point(i).real());
  return {g, std::move(v)};
}

double sup_recovery_error(const BeltramiField& mu, const QcMap& m) {
  const BeltramiField rec = beltrami_of_map(m);
  const auto mask = interior_mask(m);
  double e = 0.0;
  for (std::size_t i = 0; i < mask.size(); ++i) {
    if (mask[i]) e = std::max(e, std::abs(rec[i] - mu[i]));
  }
  return e;
}

}  // namespace

TEST_CASE("zero coefficient gives the identity") {
  const GridSpec g = qt::grid(64, 4.0);
  const SolveResult r = solve_detailed(BeltramiField::zero(g));
  CHECK(r.stats.residual == 0.0);
  for (std::size_t i = 0; i < g.size(); ++i) CHECK(std::abs(r.map.values()[i] - g.point(i)) < 1e-14);
}

TEST_CASE("affine oracle for constant mu") {
  const GridSpec g = qt::grid(256, 8.0);
  const QcMap m = solve_normalized(qt::constant(g, 0.2));
  CHECK(m.normalization() == Normalization::fix_0_1_inf);
  double worst = 0.0;
  for (std::size_t i = 0; i < g.size(); ++i) {
    const cplx z = g.point(i);
    worst = std::max(worst, std::abs(m.values()[i] - (z + 0.2 * std::conj(z)) / 1.2));
  }
  CHECK(worst < 1e-9);
  CHECK(std::abs(m(cplx(0.0, 1.0)) - cplx(0.0, 2.0 / 3.0)) < 1e-9);

  // beltrami_of_map is exact on affine maps
  CHECK(sup_recovery_error(qt::constant(g, 0.2), m) < 1e-12);

  // real constant coefficient fixes the real line
  const Curve line = map_line(m, 101);
  for (std::size_t i = 0; i < line.points.size(); ++i) {
    CHECK(std::abs(line.points[i] - static_cast<double>(i) / 100.0) < 1e-9);
  }
}

TEST_CASE("renormalization") {
  const GridSpec g = qt::grid(32, 4.0);
  std::vector<cplx> id(g.size()), aff(g.size());
  for (std::size_t i = 0; i < g.size(); ++i) {
    id[i] = g.point(i);
    aff[i] = 2.0 * g.point(i) + 1.0;
  }
  const QcMap a = renormalize_036(QcMap(g, aff, Normalization::hydrodynamic, 0.0));
  const QcMap b = renormalize_036(QcMap(g, id, Normalization::hydrodynamic, 0.0));
  for (std::size_t i = 0; i < g.size(); ++i) {
    CHECK(std::abs(a.values()[i] - g.point(i)) < 1e-13);
    CHECK(std::abs(b.values()[i] - g.point(i)) < 1e-13);
  }
  CHECK_THROWS_AS(renormalize_036(QcMap(g, std::vector<cplx>(g.size(), 1.0), Normalization::hydrodynamic, 0.0)),
                  Error);
}

TEST_CASE("identity map line and recovery") {
  const GridSpec g = qt::grid(32, 4.0);
  std::vector<cplx> id(g.size());
  for (std::size_t i = 0; i < g.size(); ++i) id[i] = g.point(i);
  const QcMap m(g, id, Normalization::fix_0_1_inf, NAN);
  const Curve c = map_line(m, 3);
  REQUIRE(c.points.size() == 3);
  CHECK(std::abs(c.points[0]) < 1e-14);
  CHECK(std::abs(c.points[1] - 0.5) < 1e-14);
  CHECK(std::abs(c.points[2] - 1.0) < 1e-14);
  CHECK(beltrami_of_map(m).norm_bound() < 1e-14);
  CHECK_THROWS_AS(map_line(m, 1), InvalidArgument);
  CHECK_THROWS_AS(m(cplx(100.0, 0.0)), OutOfGrid);
}

TEST_CASE("Beurling transform maps dbar g to d g") {
  const GridSpec g = qt::grid(512, 16.0);
  SpectralOperators ops(g);
  std::vector<cplx> dbar(g.size()), d(g.size()), out(g.size());
  for (std::size_t i = 0; i < g.size(); ++i) {
    const cplx z = g.point(i);
    const double gz = qt::gauss(z, 0.0, 1.0);
    dbar[i] = -z * gz;
    d[i] = -std::conj(z) * gz;
  }
  ops.beurling(dbar, out);
  double worst = 0.0;
  for (std::size_t i = 0; i < g.size(); ++i) worst = std::max(worst, std::abs(out[i] - d[i]));
  CHECK(worst <= 1e-8);

  // spectral derivatives of the same bump
  std::vector<cplx> gv(g.size()), dd(g.size());
  for (std::size_t i = 0; i < g.size(); ++i) gv[i] = qt::gauss(g.point(i), 0.0, 1.0);
  ops.d_dzbar(gv, dd);
  worst = 0.0;
  for (std::size_t i = 0; i < g.size(); ++i) worst = std::max(worst, std::abs(dd[i] - dbar[i]));
  CHECK(worst <= 1e-8);
}

TEST_CASE("solver on a smooth coefficient") {
  const GridSpec g = qt::grid(512, 16.0);
  const BeltramiField mu = smooth_mu(g, {0.4, -0.3}, 2.5, cplx(0.3, 0.4));
  const SolveResult r = solve_detailed(mu);
  const QcMap m = renormalize_036(r.map);

  SUBCASE("contraction") {
    const auto& inc = r.stats.increments;
    REQUIRE(inc.size() >= 3);
    for (std::size_t i = 1; i < inc.size(); ++i) {
      if (inc[i - 1] > 1e-13) CHECK(inc[i] / inc[i - 1] <= mu.norm_bound() + 0.05);
    }
  }
  SUBCASE("recovery within 5 grid steps") { CHECK(sup_recovery_error(mu, m) <= 5.0 * g.step()); }
  SUBCASE("orientation preserving") {
    const double h = g.step();
    const auto v = m.values();
    for (std::size_t row = 1; row + 1 < g.n; ++row) {
      for (std::size_t c = 1; c + 1 < g.n; ++c) {
        const cplx fx = (v[g.index(row, c + 1)] - v[g.index(row, c - 1)]) / (2 * h);
        const cplx fy = (v[g.index(row + 1, c)] - v[g.index(row - 1, c)]) / (2 * h);
        const cplx dz = 0.5 * (fx - cplx(0, 1) * fy);
        const cplx dzb = 0.5 * (fx + cplx(0, 1) * fy);
        if (std::norm(dz) - std::norm(dzb) <= 0.0) {
          FAIL("Jacobian not positive at row " << row << ", col " << c);
        }
      }
    }
  }
  SUBCASE("hydrodynamic normalization") {
    // phi(z) - z = O(1/z): small near the grid edge
    const cplx far{14.0, 3.0};
    CHECK(std::abs(r.map(far) - far) < 0.2);
  }
}

TEST_CASE("symmetric coefficient maps the real line to itself") {
  const GridSpec g = qt::grid(256, 16.0);
  const BeltramiField raw = smooth_mu(g, {0.5, 0.8}, 2.0, cplx(0.2, 0.35));
  std::vector<cplx> v(g.size());
  for (std::size_t r = 0; r < g.n; ++r) {
    for (std::size_t c = 0; c < g.n; ++c) {
      v[g.index(r, c)] = 0.5 * (raw.at(r, c) + std::conj(raw.at(g.mirror_row(r), c)));
    }
  }
  const BeltramiField mu(g, v);
  REQUIRE(symmetry_residuals(mu).symm < 1e-15);
  const Curve line = map_line(solve_normalized(mu), 257);
  double worst = 0.0;
  for (const cplx p : line.points) worst = std::max(worst, std::abs(p.imag()));
  CHECK(worst <= 5.0 * g.step());
}

TEST_CASE("antisymmetric bump gives a curve through 0 and 1") {
  const GridSpec g = qt::grid(256, 16.0);
  GeneratorSpec spec;
  spec.kind = GeneratorKind::bump;
  spec.k = 0.3;
  spec.antisymmetrize = true;
  const Curve line = map_line(solve_normalized(generate_mu(g, spec, 1)), 129);
  CHECK(std::abs(line.points.front()) < 1e-12);
  CHECK(std::abs(line.points.back() - 1.0) < 1e-12);
  double off = 0.0;
  for (const cplx p : line.points) off = std::max(off, std::abs(p.imag()));
  CHECK(off > 1e-3);
}

TEST_CASE("grid refinement") {
  // sup distance between solutions at n and 2n on a common set of points
  std::vector<QcMap> maps;
  for (const std::size_t n : {128u, 256u, 512u}) {
    const GridSpec g = qt::grid(n, 16.0);
    maps.push_back(solve_normalized(smooth_mu(g, {0.4, -0.3}, 2.5, cplx(0.3, 0.4))));
  }
  std::vector<cplx> probes;
  for (int i = -12; i <= 12; ++i) {
    for (int j = -12; j <= 12; ++j) probes.emplace_back(0.25 * i + 0.013, 0.25 * j - 0.007);
  }
  double d1 = 0.0, d2 = 0.0;
  for (const cplx z : probes) {
    d1 = std::max(d1, std::abs(maps[0](z) - maps[1](z)));
    d2 = std::max(d2, std::abs(maps[1](z) - maps[2](z)));
  }
  MESSAGE("refinement distances " << d1 << " -> " << d2);
  CHECK(d1 / d2 >= 1.5);
}

TEST_CASE("radial coefficient at n = 1024") {
  const GridSpec g = qt::grid(1024, 16.0);
  const BeltramiField mu = qt::field(g, [](cplx z) { return std::abs(z) < 1.0 ? cplx(0.3, 0.0) : cplx(0.0); });
  const SolveResult r = solve_detailed(mu);
  CHECK(r.stats.residual <= 1e-6);
}

TEST_CASE("non-convergence is reported") {
  const GridSpec g = qt::grid(64, 8.0);
  SolverOptions opts;
  opts.max_iter = 2;
  CHECK_THROWS_AS(solve(smooth_mu(g, 0.0, 2.0, 0.9), opts), ConvergenceError);
}

TEST_CASE("inverse and composition") {
  const GridSpec g = qt::grid(256, 16.0);
  const QcMap m = solve_normalized(smooth_mu(g, {0.2, 0.1}, 2.0, cplx(0.0, 0.4)));
  const MapInverter inv(m);
  for (const auto [r, c] : {std::pair{130u, 131u}, std::pair{120u, 100u}, std::pair{90u, 150u}}) {
    const auto back = inv.preimage(m.at(r, c));
    REQUIRE(back.has_value());
    CHECK(std::abs(*back - g.point(r, c)) < 1e-9);
  }
  CHECK_FALSE(inv.preimage(cplx(1e3, 0.0)).has_value());

  // m o m^{-1} = id where defined
  const QcMap id = compose_inverse(m, m);
  std::size_t defined = 0;
  double worst = 0.0;
  for (std::size_t r = g.n / 4; r < 3 * g.n / 4; ++r) {
    for (std::size_t c = g.n / 4; c < 3 * g.n / 4; ++c) {
      const cplx w = id.at(r, c);
      if (!std::isfinite(w.real())) continue;
      ++defined;
      worst = std::max(worst, std::abs(w - g.point(r, c)));
    }
  }
  CHECK(defined == g.size() / 4);
  CHECK(worst < 1e-6);
}
