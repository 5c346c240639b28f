#pragma once

#include <complex>
#include <cstddef>
#include <utility>

namespace quasidim {

using cplx = std::complex<double>;

/// Square, cell-centered sampling grid. Samples are stored row-major with
/// row 0 at the bottom (smallest imaginary part).
struct GridSpec {
  cplx center{0.0, 0.0};
  double half_width = 16.0;
  std::size_t n = 256;

  /// Throws InvalidArgument unless n >= 16 is a power of two and half_width > 0.
  void validate() const;

  double step() const { return 2.0 * half_width / static_cast<double>(n); }
  std::size_t size() const { return n * n; }
  std::size_t index(std::size_t row, std::size_t col) const { return row * n + col; }
  cplx point(std::size_t row, std::size_t col) const;
  cplx point(std::size_t idx) const { return point(idx / n, idx % n); }

  /// Continuous (col, row) coordinates of z; sample (r, c) sits at (c, r).
  std::pair<double, double> to_grid(cplx z) const;

  /// True when z -> conj(z) maps the sample set onto itself.
  bool conjugation_symmetric() const { return center.imag() == 0.0; }
  std::size_t mirror_row(std::size_t row) const { return n - 1 - row; }
  /// Row lies in the open upper half-plane (requires a symmetric grid).
  bool upper_row(std::size_t row) const { return 2 * row >= n; }

  friend bool operator==(const GridSpec&, const GridSpec&) = default;
};

}  // namespace quasidim
