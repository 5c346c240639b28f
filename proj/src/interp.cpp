#include "quasidim/interp.hpp"

#include "quasidim/error.hpp"

#include <array>
#include <cmath>
#include <sstream>

namespace quasidim {

cplx bilinear(const GridSpec& grid, std::span<const cplx> values, cplx z) {
  const auto [u, v] = grid.to_grid(z);
  const double last = static_cast<double>(grid.n - 1);
  // tiny slack so that points exactly on the outer sample ring are accepted
  constexpr double slack = 1e-9;
  if (!(u >= -slack && u <= last + slack && v >= -slack && v <= last + slack)) {
    std::ostringstream msg;
    msg << "point " << z << " lies outside the sampled grid";
    throw OutOfGrid(msg.str());
  }
  const auto clamp_cell = [&](double t) {
    const double f = std::floor(t);
    return static_cast<std::size_t>(std::clamp(f, 0.0, last - 1.0));
  };
  const std::size_t c0 = clamp_cell(u);
  const std::size_t r0 = clamp_cell(v);
  const double fu = u - static_cast<double>(c0);
  const double fv = v - static_cast<double>(r0);
  const cplx a = values[grid.index(r0, c0)];
  const cplx b = values[grid.index(r0, c0 + 1)];
  const cplx c = values[grid.index(r0 + 1, c0)];
  const cplx d = values[grid.index(r0 + 1, c0 + 1)];
  return (1.0 - fv) * ((1.0 - fu) * a + fu * b) + fv * ((1.0 - fu) * c + fu * d);
}

namespace {

// Catmull-Rom weights and their derivatives for fractional offset t.
std::array<double, 4> cr_weights(double t) {
  const double t2 = t * t, t3 = t2 * t;
  return {0.5 * (-t3 + 2.0 * t2 - t), 0.5 * (3.0 * t3 - 5.0 * t2 + 2.0),
          0.5 * (-3.0 * t3 + 4.0 * t2 + t), 0.5 * (t3 - t2)};
}

std::array<double, 4> cr_derivs(double t) {
  const double t2 = t * t;
  return {0.5 * (-3.0 * t2 + 4.0 * t - 1.0), 0.5 * (9.0 * t2 - 10.0 * t),
          0.5 * (-9.0 * t2 + 8.0 * t + 1.0), 0.5 * (3.0 * t2 - 2.0 * t)};
}

}  // namespace

std::optional<CubicSample> bicubic(const GridSpec& grid, std::span<const cplx> values, cplx z) {
  const auto [u, v] = grid.to_grid(z);
  if (!std::isfinite(u) || !std::isfinite(v)) return std::nullopt;
  const double fu0 = std::floor(u), fv0 = std::floor(v);
  const double n = static_cast<double>(grid.n);
  if (fu0 < 1.0 || fv0 < 1.0 || fu0 + 2.0 > n - 1.0 || fv0 + 2.0 > n - 1.0) return std::nullopt;
  const auto c0 = static_cast<std::size_t>(fu0);
  const auto r0 = static_cast<std::size_t>(fv0);
  const auto wx = cr_weights(u - fu0), dx = cr_derivs(u - fu0);
  const auto wy = cr_weights(v - fv0), dy = cr_derivs(v - fv0);
  CubicSample s{};
  for (int j = 0; j < 4; ++j) {
    cplx row_val{}, row_dx{};
    for (int i = 0; i < 4; ++i) {
      const cplx f = values[grid.index(r0 - 1 + j, c0 - 1 + i)];
      if (!std::isfinite(f.real()) || !std::isfinite(f.imag())) return std::nullopt;
      row_val += wx[i] * f;
      row_dx += dx[i] * f;
    }
    s.value += wy[j] * row_val;
    s.d_dx += wy[j] * row_dx;
    s.d_dy += dy[j] * row_val;
  }
  const double h = grid.step();
  s.d_dx /= h;
  s.d_dy /= h;
  return s;
}

}  // namespace quasidim
