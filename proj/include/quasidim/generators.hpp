#pragma once

#include "quasidim/field.hpp"

#include <cstdint>
#include <string_view>
#include <vector>

namespace quasidim {

enum class GeneratorKind { bump, checkerboard, random_smooth };

GeneratorKind parse_generator_kind(std::string_view name);
std::string_view to_string(GeneratorKind kind);

struct GeneratorSpec {
  GeneratorKind kind = GeneratorKind::random_smooth;
  double k = 0.3;               ///< target sup norm
  bool antisymmetrize = false;  ///< project onto mu(conj z) = -conj(mu(z))
  double support_radius = 4.0;
  cplx support_center{0.5, 0.0};
  int bumps = 6;                ///< random_smooth: number of Gaussian lobes
  double axis_clearance = 0.0;  ///< > 0: multiply by 1 - exp(-(y/c)^2)
};

/// Deterministic in (grid, spec, seed). The result has sup norm k up to rounding.
BeltramiField generate_mu(const GridSpec& grid, const GeneratorSpec& spec, std::uint64_t seed);

/// C-infinity bump exp(1 - 1/(1 - r^2/R^2)) with peak 1 at center, zero for r >= R.
std::vector<double> smooth_bump(const GridSpec& grid, cplx center, double radius);

/// (mu(z) - conj(mu(conj z))) / 2, sample by sample.
std::vector<cplx> antisymmetric_part(const GridSpec& grid, std::span<const cplx> values);

/// Rescales to sup norm k. Throws InvalidArgument for an all-zero field with k > 0.
BeltramiField rescale_to_norm(const GridSpec& grid, std::vector<cplx> values, double k);

}  // namespace quasidim
