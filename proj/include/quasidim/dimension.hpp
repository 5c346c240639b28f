#pragma once

#include "quasidim/solver.hpp"
#include "quasidim/thermo.hpp"

#include <string_view>
#include <vector>

namespace quasidim {

enum class DimensionMethod { box_count, covering_exponent };
std::string_view to_string(DimensionMethod m);

struct DimensionEstimate {
  double value = 1.0;          ///< clamped to [1, 2]
  double raw = 1.0;            ///< unclamped fit
  DimensionMethod method = DimensionMethod::box_count;
  std::vector<double> scales;  ///< eps (box counting) or n (covering ladder)
  double fit_residual = 0.0;   ///< RMS of the log-log fit (box counting)
  double half_width = 0.0;     ///< ~95% confidence half-width of the slope
};

/// Number of eps-boxes (anchored at the origin) containing a curve sample.
/// Throws InvalidArgument when consecutive samples are more than eps/2 apart.
std::size_t box_count(const Curve& curve, double eps);

/// Least-squares slope of log N(eps) against log(1/eps), dropping the two
/// coarsest scales. eps runs over 2^-coarsest_exponent .. 2^-finest_exponent.
DimensionEstimate box_dimension(const Curve& curve, int coarsest_exponent = 4, int finest_exponent = 10);

/// Covering data of one map at interval counts n in `ladder`.
std::vector<CoveringData> covering_ladder(const QcMap& map, cplx lambda, const std::vector<std::size_t>& ladder);

/// {2^5, ..., 2^12}.
std::vector<std::size_t> default_ladder();

/// The exponent p* at which log sum_j |r_j|^p stops growing or decaying with
/// n: the root of the least-squares slope s(p) of log S_n(p) against log n.
/// Throws ContractViolation when s(p) is not decreasing in p.
DimensionEstimate covering_exponent(const std::vector<CoveringData>& ladder, cplx lambda);

struct DimensionBounds {
  double bound_1k = 1.0;    ///< 1 + k
  double bound_37k2 = 1.0;  ///< 1 + 37 k^2
  double bound_k2 = 1.0;    ///< 1 + k^2
};

/// All three capped at 2.
DimensionBounds bounds_table(double k);

}  // namespace quasidim
