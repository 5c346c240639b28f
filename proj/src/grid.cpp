#include "quasidim/grid.hpp"

#include "quasidim/error.hpp"

#include <bit>
#include <cmath>
#include <string>

namespace quasidim {

void GridSpec::validate() const {
  if (n < 16 || !std::has_single_bit(n)) {
    throw InvalidArgument("grid size must be a power of two >= 16, got " + std::to_string(n));
  }
  if (!(half_width > 0.0) || !std::isfinite(half_width)) {
    throw InvalidArgument("grid half_width must be positive and finite");
  }
  if (!std::isfinite(center.real()) || !std::isfinite(center.imag())) {
    throw InvalidArgument("grid center must be finite");
  }
}

cplx GridSpec::point(std::size_t row, std::size_t col) const {
  const double h = step();
  return {center.real() - half_width + (static_cast<double>(col) + 0.5) * h,
          center.imag() - half_width + (static_cast<double>(row) + 0.5) * h};
}

std::pair<double, double> GridSpec::to_grid(cplx z) const {
  const double h = step();
  return {(z.real() - (center.real() - half_width)) / h - 0.5,
          (z.imag() - (center.imag() - half_width)) / h - 0.5};
}

}  // namespace quasidim
