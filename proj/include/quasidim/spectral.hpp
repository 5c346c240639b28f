#pragma once

// Fourier-multiplier operators on the periodized grid. Frequencies
// xi = a + ib (a along columns, b along rows). Zero and Nyquist modes are
// dropped so every operator commutes exactly with z -> conj(z) reflections.
//
//   beurling : conj(xi) / xi
//   cauchy   : -2i / xi        (inverse of d/dzbar on mean-zero data)
//   d_dz     : i conj(xi) / 2
//   d_dzbar  : i xi / 2

#include "quasidim/grid.hpp"

#include <memory>
#include <span>

namespace quasidim {

class SpectralOperators {
 public:
  explicit SpectralOperators(const GridSpec& grid);
  ~SpectralOperators();
  SpectralOperators(const SpectralOperators&) = delete;
  SpectralOperators& operator=(const SpectralOperators&) = delete;

  const GridSpec& grid() const;

  void beurling(std::span<const cplx> in, std::span<cplx> out);
  void cauchy(std::span<const cplx> in, std::span<cplx> out);
  void d_dz(std::span<const cplx> in, std::span<cplx> out);
  void d_dzbar(std::span<const cplx> in, std::span<cplx> out);

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

}  // namespace quasidim
