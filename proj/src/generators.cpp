#include "quasidim/generators.hpp"

#include "quasidim/error.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <string>

namespace quasidim {

GeneratorKind parse_generator_kind(std::string_view name) {
  if (name == "bump") return GeneratorKind::bump;
  if (name == "checkerboard") return GeneratorKind::checkerboard;
  if (name == "random-smooth" || name == "random_smooth") return GeneratorKind::random_smooth;
  throw InvalidArgument("unknown generator '" + std::string(name) + "'");
}

std::string_view to_string(GeneratorKind kind) {
  switch (kind) {
    case GeneratorKind::bump: return "bump";
    case GeneratorKind::checkerboard: return "checkerboard";
    case GeneratorKind::random_smooth: return "random-smooth";
  }
  return "?";
}

namespace {

double bump_profile(double r2_over_R2) {
  if (r2_over_R2 >= 1.0) return 0.0;
  return std::exp(1.0 - 1.0 / (1.0 - r2_over_R2));
}

}  // namespace

std::vector<double> smooth_bump(const GridSpec& grid, cplx center, double radius) {
  if (!(radius > 0.0)) throw InvalidArgument("bump radius must be positive");
  std::vector<double> out(grid.size());
  for (std::size_t i = 0; i < grid.size(); ++i) {
    out[i] = bump_profile(std::norm(grid.point(i) - center) / (radius * radius));
  }
  return out;
}

std::vector<cplx> antisymmetric_part(const GridSpec& grid, std::span<const cplx> values) {
  if (!grid.conjugation_symmetric()) throw InvalidArgument("antisymmetrization needs a symmetric grid");
  std::vector<cplx> out(grid.size());
  for (std::size_t r = 0; r < grid.n; ++r) {
    for (std::size_t c = 0; c < grid.n; ++c) {
      const cplx a = values[grid.index(r, c)];
      const cplx b = values[grid.index(grid.mirror_row(r), c)];
      out[grid.index(r, c)] = (a - std::conj(b)) / 2.0;
    }
  }
  return out;
}

BeltramiField rescale_to_norm(const GridSpec& grid, std::vector<cplx> values, double k) {
  if (!(k >= 0.0 && k < 1.0)) throw InvalidArgument("target norm k must lie in [0, 1)");
  if (k == 0.0) return BeltramiField::zero(grid);
  double sup = 0.0;
  for (const cplx& z : values) sup = std::max(sup, std::abs(z));
  if (sup == 0.0) throw InvalidArgument("cannot rescale an all-zero field to k > 0");
  const double s = k / sup;
  for (cplx& z : values) z *= s;
  return BeltramiField(grid, std::move(values));
}

BeltramiField generate_mu(const GridSpec& grid, const GeneratorSpec& spec, std::uint64_t seed) {
  grid.validate();
  if (!(spec.support_radius > 0.0)) throw InvalidArgument("support_radius must be positive");
  if (spec.k == 0.0) return BeltramiField::zero(grid);

  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::normal_distribution<double> normal(0.0, 1.0);
  const double R = spec.support_radius;
  const cplx c0 = spec.support_center;
  const auto window = smooth_bump(grid, c0, R);
  const auto random_point = [&](double radius) {
    const double rr = radius * std::sqrt(unit(rng));
    return c0 + std::polar(rr, 2.0 * std::numbers::pi * unit(rng));
  };

  std::vector<cplx> mu(grid.size(), cplx{});
  switch (spec.kind) {
    case GeneratorKind::bump: {
      const cplx center = random_point(0.25 * R);
      const cplx phase = std::polar(1.0, 2.0 * std::numbers::pi * unit(rng));
      const auto b = smooth_bump(grid, center, 0.5 * R);
      for (std::size_t i = 0; i < grid.size(); ++i) mu[i] = phase * b[i];
      break;
    }
    case GeneratorKind::checkerboard: {
      const cplx phase = std::polar(1.0, 2.0 * std::numbers::pi * unit(rng));
      const double ox = unit(rng), oy = unit(rng);
      const double cell = std::max(R / 4.0, 1e-3);
      for (std::size_t i = 0; i < grid.size(); ++i) {
        const cplx z = grid.point(i) - c0;
        mu[i] = phase * window[i] * std::sin(std::numbers::pi * (z.real() / cell + ox)) *
                std::sin(std::numbers::pi * (z.imag() / cell + oy));
      }
      break;
    }
    case GeneratorKind::random_smooth: {
      if (spec.bumps < 1) throw InvalidArgument("random-smooth generator needs bumps >= 1");
      struct Lobe {
        cplx center;
        double inv_width2;
        cplx amplitude;
      };
      std::vector<Lobe> lobes;
      for (int j = 0; j < spec.bumps; ++j) {
        const cplx center = random_point(0.75 * R);
        const double width = R * (0.15 + 0.15 * unit(rng));
        const double re = normal(rng);
        const double im = normal(rng);
        lobes.push_back({center, 1.0 / (width * width), {re, im}});
      }
      for (std::size_t i = 0; i < grid.size(); ++i) {
        if (window[i] == 0.0) continue;
        const cplx z = grid.point(i);
        cplx s{};
        for (const auto& l : lobes) s += l.amplitude * std::exp(-std::norm(z - l.center) * l.inv_width2);
        mu[i] = window[i] * s;
      }
      break;
    }
  }
  if (spec.axis_clearance > 0.0) {
    for (std::size_t i = 0; i < grid.size(); ++i) {
      const double y = grid.point(i).imag() / spec.axis_clearance;
      mu[i] *= 1.0 - std::exp(-y * y);
    }
  }
  if (spec.antisymmetrize) mu = antisymmetric_part(grid, mu);
  return rescale_to_norm(grid, std::move(mu), spec.k);
}

}  // namespace quasidim
