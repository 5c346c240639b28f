#pragma once

#include "quasidim/grid.hpp"

#include <optional>
#include <span>

namespace quasidim {

/// Bilinear interpolation of grid samples. Throws OutOfGrid outside the
/// convex hull of the sample centers.
cplx bilinear(const GridSpec& grid, std::span<const cplx> values, cplx z);

/// Value and partial derivatives of a Catmull-Rom bicubic interpolant.
struct CubicSample {
  cplx value;
  cplx d_dx;
  cplx d_dy;
};

/// Bicubic (Catmull-Rom) interpolation; nullopt when the 4x4 stencil leaves
/// the grid or touches a non-finite sample.
std::optional<CubicSample> bicubic(const GridSpec& grid, std::span<const cplx> values, cplx z);

}  // namespace quasidim
