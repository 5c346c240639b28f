#include "quasidim/thermo.hpp"

#include "quasidim/error.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <random>
#include <sstream>

namespace quasidim {

CoveringData::CoveringData(std::vector<cplx> lambdas, std::vector<std::vector<cplx>> radii)
    : lambdas_(std::move(lambdas)), radii_(std::move(radii)) {
  if (lambdas_.empty() || lambdas_.size() != radii_.size()) {
    throw InvalidArgument("covering data: one radius row per lambda sample required");
  }
  n_ = radii_.front().size();
  if (n_ == 0) throw InvalidArgument("covering data: no intervals");
  for (std::size_t l = 0; l < radii_.size(); ++l) {
    if (radii_[l].size() != n_) throw InvalidArgument("covering data: ragged radius rows");
    for (std::size_t j = 0; j < n_; ++j) {
      if (!(std::abs(radii_[l][j]) >= 1e-14)) {
        std::ostringstream msg;
        msg << "covering data: radius " << j << " vanishes at lambda " << lambdas_[l]
            << " (map not injective)";
        throw ContractViolation(msg.str());
      }
    }
  }
}

std::size_t CoveringData::lambda_index(cplx lambda) const {
  for (std::size_t i = 0; i < lambdas_.size(); ++i) {
    if (std::abs(lambdas_[i] - lambda) <= 1e-14) return i;
  }
  std::ostringstream msg;
  msg << "lambda " << lambda << " is not among the covering samples";
  throw InvalidArgument(msg.str());
}

namespace {

std::vector<cplx> radii_of(const QcMap& m, std::size_t n) {
  std::vector<cplx> pts(n + 1);
  for (std::size_t j = 0; j <= n; ++j) pts[j] = m(static_cast<double>(j) / static_cast<double>(n));
  std::vector<cplx> r(n);
  for (std::size_t j = 0; j < n; ++j) r[j] = pts[j + 1] - pts[j];
  return r;
}

}  // namespace

CoveringData covering_from_family(const MotionFamily& family, std::size_t n) {
  if (n == 0) throw InvalidArgument("covering needs n >= 1");
  std::vector<std::vector<cplx>> radii;
  for (const QcMap& m : family.maps) radii.push_back(radii_of(m, n));
  return CoveringData(family.lambdas, std::move(radii));
}

CoveringData covering_from_map(const QcMap& map, cplx lambda, std::size_t n) {
  if (n == 0) throw InvalidArgument("covering needs n >= 1");
  return CoveringData({lambda}, {radii_of(map, n)});
}

Distribution::Distribution(std::vector<double> nu) : nu_(std::move(nu)) {
  if (nu_.empty()) throw InvalidArgument("distribution is empty");
  double s = 0.0;
  for (double x : nu_) {
    if (!(x >= 0.0)) throw InvalidArgument("distribution has a negative or NaN weight");
    s += x;
  }
  if (std::abs(s - 1.0) > 1e-12) throw InvalidArgument("distribution weights do not sum to 1");
}

Distribution Distribution::uniform(std::size_t n) {
  return Distribution(std::vector<double>(n, 1.0 / static_cast<double>(n)));
}

Distribution Distribution::point_mass(std::size_t n, std::size_t j) {
  std::vector<double> w(n, 0.0);
  w.at(j) = 1.0;
  return Distribution(std::move(w));
}

Distribution Distribution::from_weights(std::vector<double> w) {
  double s = 0.0;
  for (double x : w) {
    if (!(x >= 0.0)) throw InvalidArgument("weights must be nonnegative");
    s += x;
  }
  if (!(s > 0.0)) throw InvalidArgument("weights must have a positive sum");
  for (double& x : w) x /= s;
  // absorb the rounding of the normalization in the largest weight
  const double drift = 1.0 - std::accumulate(w.begin(), w.end(), 0.0);
  *std::max_element(w.begin(), w.end()) += drift;
  return Distribution(std::move(w));
}

double covering_sum(const CoveringData& c, cplx lambda, double p) {
  if (!(p > 0.0)) throw InvalidArgument("covering_sum: p must be positive");
  double s = 0.0;
  for (const cplx r : c.radii(lambda)) s += std::pow(std::abs(r), p);
  return s;
}

double log_covering_sum(const CoveringData& c, cplx lambda, double p) {
  if (!(p > 0.0)) throw InvalidArgument("log_covering_sum: p must be positive");
  const auto r = c.radii(lambda);
  double top = -std::numeric_limits<double>::infinity();
  for (const cplx x : r) top = std::max(top, p * std::log(std::abs(x)));
  double s = 0.0;
  for (const cplx x : r) s += std::exp(p * std::log(std::abs(x)) - top);
  return top + std::log(s);
}

double entropy(const Distribution& nu) {
  double s = 0.0;
  for (double x : nu.weights()) {
    if (x > 0.0) s -= x * std::log(x);
  }
  return s;
}

double lyapunov(const CoveringData& c, const Distribution& nu, cplx lambda) {
  const auto r = c.radii(lambda);
  if (nu.size() != r.size()) throw InvalidArgument("lyapunov: distribution size mismatch");
  double s = 0.0;
  for (std::size_t j = 0; j < r.size(); ++j) {
    if (nu[j] > 0.0) s -= nu[j] * std::log(std::abs(r[j]));
  }
  return s;
}

double variational_value(const CoveringData& c, const Distribution& nu, cplx lambda, double p) {
  return entropy(nu) - p * lyapunov(c, nu, lambda);
}

double jensen_gap(const CoveringData& c, const Distribution& nu, cplx lambda, double p) {
  return log_covering_sum(c, lambda, p) - variational_value(c, nu, lambda, p);
}

Distribution gibbs(const CoveringData& c, cplx lambda, double p) {
  const auto r = c.radii(lambda);
  const double lse = log_covering_sum(c, lambda, p);
  std::vector<double> w(r.size());
  for (std::size_t j = 0; j < r.size(); ++j) w[j] = std::exp(p * std::log(std::abs(r[j])) - lse);
  return Distribution::from_weights(std::move(w));
}

QuasisymmetryEstimate quasisymmetry_constant(const MotionFamily& family, std::size_t samples,
                                             std::uint64_t seed) {
  if (samples < 100) throw InvalidArgument("quasisymmetry_constant needs at least 100 triples");
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  // distances are drawn log-uniformly over [2^-8, 1]
  const auto offset = [&](double x) {
    const double d = std::exp2(-8.0 * unit(rng));
    const double s = unit(rng) < 0.5 ? -1.0 : 1.0;
    double t = x + s * d;
    if (t < 0.0 || t > 1.0) t = x - s * d;
    return std::clamp(t, 0.0, 1.0);
  };
  struct Triple {
    double x, y, z;
  };
  std::vector<Triple> triples;
  triples.reserve(samples);
  while (triples.size() < samples) {
    const double x = unit(rng);
    double y = offset(x), z = offset(x);
    if (std::abs(z - x) > std::abs(y - x)) std::swap(y, z);
    if (z == x) continue;
    triples.push_back({x, y, z});
  }

  QuasisymmetryEstimate est;
  est.triples = samples;
  for (const QcMap& m : family.maps) {
    for (const Triple& t : triples) {
      const cplx fx = m(t.x);
      const double near = std::abs(m(t.z) - fx);
      const double far = std::abs(m(t.y) - fx);
      if (far > 0.0) est.ratio_bound = std::max(est.ratio_bound, near / far);
      if (far < 2.0 * near) {
        est.separation_bound = std::max(est.separation_bound, std::abs(t.y - t.x) / std::abs(t.z - t.x));
      }
    }
  }
  est.C = std::max({est.ratio_bound, est.separation_bound, 1.0});
  return est;
}

double harnack_functional(const CoveringData& c, const Distribution& nu, double C, cplx lambda) {
  if (!(C >= 1.0)) throw InvalidArgument("harnack_functional: C must be >= 1");
  return 2.0 * lyapunov(c, nu, lambda) - entropy(nu) + 3.0 * std::log(C);
}

double covering_exponent_for(double k, double rho) {
  if (!(rho > 0.0 && rho <= 1.0)) throw InvalidArgument("rho must lie in (0, 1]");
  return 1.0 + k * k / (rho * rho);
}

}  // namespace quasidim
