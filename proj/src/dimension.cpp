#include "quasidim/dimension.hpp"

#include "quasidim/error.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <sstream>

namespace quasidim {

std::string_view to_string(DimensionMethod m) {
  return m == DimensionMethod::box_count ? "box_count" : "covering_exponent";
}

namespace {

struct LineFit {
  double slope = 0.0;
  double intercept = 0.0;
  double rms = 0.0;
  double slope_se = 0.0;
};

LineFit fit_line(const std::vector<double>& x, const std::vector<double>& y) {
  const std::size_t n = x.size();
  double mx = 0.0, my = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    mx += x[i];
    my += y[i];
  }
  mx /= static_cast<double>(n);
  my /= static_cast<double>(n);
  double sxx = 0.0, sxy = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    sxx += (x[i] - mx) * (x[i] - mx);
    sxy += (x[i] - mx) * (y[i] - my);
  }
  LineFit f;
  f.slope = sxy / sxx;
  f.intercept = my - f.slope * mx;
  double ss = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double e = y[i] - (f.intercept + f.slope * x[i]);
    ss += e * e;
  }
  f.rms = std::sqrt(ss / static_cast<double>(n));
  if (n > 2) f.slope_se = std::sqrt(ss / static_cast<double>(n - 2) / sxx);
  return f;
}

}  // namespace

std::size_t box_count(const Curve& curve, double eps) {
  if (!(eps > 0.0)) throw InvalidArgument("box_count: eps must be positive");
  curve.validate();
  for (std::size_t i = 0; i + 1 < curve.points.size(); ++i) {
    if (std::abs(curve.points[i + 1] - curve.points[i]) > 0.5 * eps) {
      std::ostringstream msg;
      msg << "box_count: curve undersampled at eps = " << eps << " (gap at sample " << i << ")";
      throw InvalidArgument(msg.str());
    }
  }
  std::vector<std::pair<std::int64_t, std::int64_t>> boxes;
  boxes.reserve(curve.points.size());
  for (const cplx p : curve.points) {
    boxes.emplace_back(static_cast<std::int64_t>(std::floor(p.real() / eps)),
                       static_cast<std::int64_t>(std::floor(p.imag() / eps)));
  }
  std::sort(boxes.begin(), boxes.end());
  return static_cast<std::size_t>(std::unique(boxes.begin(), boxes.end()) - boxes.begin());
}

DimensionEstimate box_dimension(const Curve& curve, int coarsest_exponent, int finest_exponent) {
  if (finest_exponent - coarsest_exponent < 5) {
    throw InvalidArgument("box_dimension needs at least 4 scales after dropping the two coarsest");
  }
  DimensionEstimate est;
  est.method = DimensionMethod::box_count;
  std::vector<double> x, y;
  for (int e = coarsest_exponent + 2; e <= finest_exponent; ++e) {
    const double eps = std::exp2(-e);
    est.scales.push_back(eps);
    x.push_back(std::log(1.0 / eps));
    y.push_back(std::log(static_cast<double>(box_count(curve, eps))));
  }
  const LineFit f = fit_line(x, y);
  est.raw = f.slope;
  est.value = std::clamp(f.slope, 1.0, 2.0);
  est.fit_residual = f.rms;
  est.half_width = 2.0 * f.slope_se;
  return est;
}

std::vector<CoveringData> covering_ladder(const QcMap& map, cplx lambda, const std::vector<std::size_t>& ladder) {
  std::vector<CoveringData> out;
  out.reserve(ladder.size());
  for (const std::size_t n : ladder) out.push_back(covering_from_map(map, lambda, n));
  return out;
}

std::vector<std::size_t> default_ladder() {
  std::vector<std::size_t> l;
  for (int e = 5; e <= 12; ++e) l.push_back(std::size_t{1} << e);
  return l;
}

DimensionEstimate covering_exponent(const std::vector<CoveringData>& ladder, cplx lambda) {
  if (ladder.size() < 4) throw InvalidArgument("covering_exponent needs at least 4 ladder rungs");
  std::vector<double> logn;
  for (const auto& c : ladder) logn.push_back(std::log(static_cast<double>(c.n())));
  const auto slope_at = [&](double p) {
    std::vector<double> y;
    for (const auto& c : ladder) y.push_back(log_covering_sum(c, lambda, p));
    return fit_line(logn, y);
  };

  // s(p) must decrease on the bracket; checked on a coarse grid first
  constexpr double lo0 = 0.5, hi0 = 2.5;
  double prev = slope_at(lo0).slope;
  for (int i = 1; i <= 40; ++i) {
    const double s = slope_at(lo0 + (hi0 - lo0) * i / 40.0).slope;
    if (!(s < prev)) {
      std::ostringstream msg;
      msg << "covering_exponent: slope not decreasing in p near p = " << lo0 + (hi0 - lo0) * i / 40.0;
      throw ContractViolation(msg.str());
    }
    prev = s;
  }
  double lo = lo0, hi = hi0;
  if (!(slope_at(lo).slope > 0.0 && slope_at(hi).slope < 0.0)) {
    throw ContractViolation("covering_exponent: no sign change of the scaling slope on [0.5, 2.5]");
  }
  for (int it = 0; it < 80; ++it) {
    const double mid = 0.5 * (lo + hi);
    (slope_at(mid).slope > 0.0 ? lo : hi) = mid;
  }
  DimensionEstimate est;
  est.method = DimensionMethod::covering_exponent;
  est.raw = 0.5 * (lo + hi);
  est.value = std::clamp(est.raw, 1.0, 2.0);
  for (const auto& c : ladder) est.scales.push_back(static_cast<double>(c.n()));
  const LineFit f = slope_at(est.raw);
  est.fit_residual = f.rms;
  // slope uncertainty translated to p through ds/dp
  const double dp = 1e-4;
  const double dsdp = (slope_at(est.raw + dp).slope - slope_at(est.raw - dp).slope) / (2.0 * dp);
  est.half_width = dsdp != 0.0 ? 2.0 * f.slope_se / std::abs(dsdp) : 0.0;
  return est;
}

DimensionBounds bounds_table(double k) {
  if (!(k >= 0.0 && k < 1.0)) throw InvalidArgument("bounds_table: k must lie in [0, 1)");
  return {std::min(2.0, 1.0 + k), std::min(2.0, 1.0 + 37.0 * k * k), std::min(2.0, 1.0 + k * k)};
}

}  // namespace quasidim
