#include "quasidim/compose.hpp"

#include "quasidim/error.hpp"
#include "quasidim/interp.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>

namespace quasidim {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

bool finite(cplx z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

// Vertex (row, col) offsets of the two triangles in a cell.
constexpr std::array<std::array<std::array<int, 2>, 3>, 2> kTri = {{
    {{{0, 0}, {0, 1}, {1, 1}}},
    {{{0, 0}, {1, 1}, {1, 0}}},
}};

}  // namespace

MapInverter::MapInverter(const QcMap& map) : map_(&map), buckets_(map.grid()) {
  const GridSpec& g = map.grid();
  const auto v = map.values();
  const std::size_t n = g.n;
  const std::size_t nb = buckets_.size();

  const auto bucket_range = [&](std::size_t cell, int half, std::array<std::size_t, 4>& out) {
    const std::size_t r = cell / (n - 1), c = cell % (n - 1);
    double umin = std::numeric_limits<double>::infinity(), umax = -umin, vmin = umin, vmax = -umin;
    for (const auto& off : kTri[half]) {
      const cplx w = v[g.index(r + off[0], c + off[1])];
      if (!finite(w)) return false;
      const auto [u, vv] = g.to_grid(w);
      umin = std::min(umin, u);
      umax = std::max(umax, u);
      vmin = std::min(vmin, vv);
      vmax = std::max(vmax, vv);
    }
    // bucket b covers grid coordinates [b - 0.5, b + 0.5)
    const double last = static_cast<double>(n - 1);
    const double c0 = std::floor(umin + 0.5), c1 = std::floor(umax + 0.5);
    const double r0 = std::floor(vmin + 0.5), r1 = std::floor(vmax + 0.5);
    if (c1 < 0.0 || r1 < 0.0 || c0 > last || r0 > last) return false;
    out = {static_cast<std::size_t>(std::max(r0, 0.0)), static_cast<std::size_t>(std::min(r1, last)),
           static_cast<std::size_t>(std::max(c0, 0.0)), static_cast<std::size_t>(std::min(c1, last))};
    return true;
  };

  const std::size_t cells = (n - 1) * (n - 1);
  std::vector<std::uint32_t> counts(nb + 1, 0);
  std::array<std::size_t, 4> rng{};
  for (std::size_t cell = 0; cell < cells; ++cell) {
    for (int half = 0; half < 2; ++half) {
      if (!bucket_range(cell, half, rng)) continue;
      for (std::size_t br = rng[0]; br <= rng[1]; ++br)
        for (std::size_t bc = rng[2]; bc <= rng[3]; ++bc) ++counts[buckets_.index(br, bc) + 1];
    }
  }
  for (std::size_t i = 0; i < nb; ++i) counts[i + 1] += counts[i];
  offsets_ = counts;
  triangles_.resize(offsets_.back());
  std::vector<std::uint32_t> fill(offsets_.begin(), offsets_.end() - 1);
  for (std::size_t cell = 0; cell < cells; ++cell) {
    for (int half = 0; half < 2; ++half) {
      if (!bucket_range(cell, half, rng)) continue;
      for (std::size_t br = rng[0]; br <= rng[1]; ++br)
        for (std::size_t bc = rng[2]; bc <= rng[3]; ++bc)
          triangles_[fill[buckets_.index(br, bc)]++] = static_cast<std::uint32_t>(cell * 2 + half);
    }
  }
}

std::optional<cplx> MapInverter::locate(cplx w) const {
  const GridSpec& g = map_->grid();
  const auto v = map_->values();
  const auto [u, vv] = g.to_grid(w);
  const double bc = std::floor(u + 0.5), br = std::floor(vv + 0.5);
  const double last = static_cast<double>(g.n - 1);
  if (!(bc >= 0.0 && br >= 0.0 && bc <= last && br <= last)) return std::nullopt;
  const std::size_t b = buckets_.index(static_cast<std::size_t>(br), static_cast<std::size_t>(bc));
  for (std::uint32_t t = offsets_[b]; t < offsets_[b + 1]; ++t) {
    const std::size_t cell = triangles_[t] / 2;
    const int half = static_cast<int>(triangles_[t] % 2);
    const std::size_t r = cell / (g.n - 1), c = cell % (g.n - 1);
    const auto& tri = kTri[half];
    const cplx p0 = v[g.index(r + tri[0][0], c + tri[0][1])];
    const cplx p1 = v[g.index(r + tri[1][0], c + tri[1][1])];
    const cplx p2 = v[g.index(r + tri[2][0], c + tri[2][1])];
    const cplx e1 = p1 - p0, e2 = p2 - p0, d = w - p0;
    const double det = e1.real() * e2.imag() - e1.imag() * e2.real();
    if (det == 0.0) continue;
    const double l1 = (d.real() * e2.imag() - d.imag() * e2.real()) / det;
    const double l2 = (e1.real() * d.imag() - e1.imag() * d.real()) / det;
    constexpr double eps = 1e-12;
    if (l1 < -eps || l2 < -eps || l1 + l2 > 1.0 + eps) continue;
    const double l0 = 1.0 - l1 - l2;
    const cplx z0 = g.point(r + tri[0][0], c + tri[0][1]);
    const cplx z1 = g.point(r + tri[1][0], c + tri[1][1]);
    const cplx z2 = g.point(r + tri[2][0], c + tri[2][1]);
    return l0 * z0 + l1 * z1 + l2 * z2;
  }
  return std::nullopt;
}

std::optional<cplx> MapInverter::preimage(cplx w) const {
  auto z = locate(w);
  if (!z) return std::nullopt;
  const GridSpec& g = map_->grid();
  const auto v = map_->values();
  const double scale = 1.0 + std::abs(w);
  for (int it = 0; it < 12; ++it) {
    const auto s = bicubic(g, v, *z);
    if (!s) break;
    const cplx f = s->value - w;
    if (std::abs(f) <= 1e-14 * scale) break;
    // real Jacobian [[Re fx, Re fy], [Im fx, Im fy]]
    const double a = s->d_dx.real(), b = s->d_dy.real(), c = s->d_dx.imag(), d = s->d_dy.imag();
    const double det = a * d - b * c;
    if (!(det > 0.0)) break;
    const double dx = (d * f.real() - b * f.imag()) / det;
    const double dy = (-c * f.real() + a * f.imag()) / det;
    const cplx next = *z - cplx{dx, dy};
    // stay within the located neighbourhood; a long jump means a bad Jacobian
    if (std::abs(next - *z) > 2.0 * g.step()) break;
    *z = next;
  }
  return z;
}

QcMap compose_inverse(const QcMap& outer, const QcMap& inner) {
  if (!(outer.grid() == inner.grid())) throw InvalidArgument("compose_inverse: grids differ");
  const GridSpec& g = inner.grid();
  MapInverter inv(inner);
  std::vector<cplx> out(g.size(), cplx{kNaN, kNaN});
  const auto ov = outer.values();
  for (std::size_t i = 0; i < g.size(); ++i) {
    const auto z = inv.preimage(g.point(i));
    if (!z) continue;
    if (const auto s = bicubic(g, ov, *z)) {
      out[i] = s->value;
    } else {
      try {
        out[i] = bilinear(g, ov, *z);
      } catch (const OutOfGrid&) {
      }
    }
  }
  const Normalization norm = outer.normalization() == Normalization::fix_0_1_inf &&
                                     inner.normalization() == Normalization::fix_0_1_inf
                                 ? Normalization::fix_0_1_inf
                                 : Normalization::hydrodynamic;
  return QcMap(g, std::move(out), norm, kNaN);
}

}  // namespace quasidim
