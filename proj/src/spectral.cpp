#include "quasidim/spectral.hpp"

#include "quasidim/error.hpp"

#include <fftw3.h>

#include <cstring>
#include <mutex>
#include <numbers>
#include <vector>

namespace quasidim {

namespace {

// FFTW's planner is not thread-safe.
std::mutex& planner_mutex() {
  static std::mutex m;
  return m;
}

}  // namespace

struct SpectralOperators::Impl {
  GridSpec grid;
  fftw_complex* buf = nullptr;
  fftw_plan forward = nullptr;
  fftw_plan backward = nullptr;
  std::vector<cplx> beurling, cauchy, dz, dzbar;

  explicit Impl(const GridSpec& g) : grid(g) {
    grid.validate();
    const int n = static_cast<int>(grid.n);
    buf = fftw_alloc_complex(grid.size());
    if (buf == nullptr) throw Error("fftw_alloc_complex failed");
    {
      std::lock_guard lock(planner_mutex());
      forward = fftw_plan_dft_2d(n, n, buf, buf, FFTW_FORWARD, FFTW_ESTIMATE);
      backward = fftw_plan_dft_2d(n, n, buf, buf, FFTW_BACKWARD, FFTW_ESTIMATE);
    }
    build_multipliers();
  }

  ~Impl() {
    std::lock_guard lock(planner_mutex());
    if (forward) fftw_destroy_plan(forward);
    if (backward) fftw_destroy_plan(backward);
    fftw_free(buf);
  }

  void build_multipliers() {
    const std::size_t n = grid.n;
    const double period = 2.0 * grid.half_width;
    const double scale = 1.0 / static_cast<double>(grid.size());
    const auto freq = [&](std::size_t j) {
      const long kk = j < n / 2 ? static_cast<long>(j) : static_cast<long>(j) - static_cast<long>(n);
      return 2.0 * std::numbers::pi * static_cast<double>(kk) / period;
    };
    beurling.assign(grid.size(), cplx{});
    cauchy.assign(grid.size(), cplx{});
    dz.assign(grid.size(), cplx{});
    dzbar.assign(grid.size(), cplx{});
    const cplx I{0.0, 1.0};
    for (std::size_t r = 0; r < n; ++r) {
      for (std::size_t c = 0; c < n; ++c) {
        if (r == n / 2 || c == n / 2) continue;
        const std::size_t idx = grid.index(r, c);
        const cplx xi{freq(c), freq(r)};
        dz[idx] = scale * I * std::conj(xi) / 2.0;
        dzbar[idx] = scale * I * xi / 2.0;
        if (r == 0 && c == 0) continue;
        beurling[idx] = scale * std::conj(xi) / xi;
        cauchy[idx] = scale * (-2.0 * I) / xi;
      }
    }
  }

  void apply(const std::vector<cplx>& mult, std::span<const cplx> in, std::span<cplx> out) {
    if (in.size() != grid.size() || out.size() != grid.size()) {
      throw InvalidArgument("spectral operator: sample count does not match grid");
    }
    auto* data = reinterpret_cast<cplx*>(buf);
    std::memcpy(data, in.data(), in.size() * sizeof(cplx));
    fftw_execute(forward);
    for (std::size_t i = 0; i < mult.size(); ++i) data[i] *= mult[i];
    fftw_execute(backward);
    std::memcpy(out.data(), data, out.size() * sizeof(cplx));
  }
};

SpectralOperators::SpectralOperators(const GridSpec& grid) : impl_(std::make_unique<Impl>(grid)) {}
SpectralOperators::~SpectralOperators() = default;

const GridSpec& SpectralOperators::grid() const { return impl_->grid; }

void SpectralOperators::beurling(std::span<const cplx> in, std::span<cplx> out) {
  impl_->apply(impl_->beurling, in, out);
}
void SpectralOperators::cauchy(std::span<const cplx> in, std::span<cplx> out) {
  impl_->apply(impl_->cauchy, in, out);
}
void SpectralOperators::d_dz(std::span<const cplx> in, std::span<cplx> out) {
  impl_->apply(impl_->dz, in, out);
}
void SpectralOperators::d_dzbar(std::span<const cplx> in, std::span<cplx> out) {
  impl_->apply(impl_->dzbar, in, out);
}

}  // namespace quasidim
