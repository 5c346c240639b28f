#pragma once

#include "quasidim/field.hpp"

#include <cmath>
#include <functional>
#include <vector>

namespace qt {

using quasidim::cplx;
using quasidim::GridSpec;

inline GridSpec grid(std::size_t n, double half_width = 16.0) { return GridSpec{{0.0, 0.0}, half_width, n}; }

inline quasidim::BeltramiField field(const GridSpec& g, const std::function<cplx(cplx)>& f) {
  std::vector<cplx> v(g.size());
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = f(g.point(i));
  return {g, std::move(v)};
}

inline quasidim::BeltramiField constant(const GridSpec& g, cplx c) {
  return field(g, [c](cplx) { return c; });
}

/// exp(-|z - c|^2 / s^2)
inline double gauss(cplx z, cplx c, double s) { return std::exp(-std::norm(z - c) / (s * s)); }

/// Wraps an angle difference into (-pi/2, pi/2].
inline double angle_mod_pi(double a) {
  const double pi = 3.14159265358979323846;
  a = std::fmod(a, pi);
  if (a > pi / 2) a -= pi;
  if (a <= -pi / 2) a += pi;
  return a;
}

}  // namespace qt
