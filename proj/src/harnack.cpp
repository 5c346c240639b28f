#include "quasidim/harnack.hpp"

#include "quasidim/error.hpp"

#include <fftw3.h>

#include <algorithm>
#include <bit>
#include <cmath>
#include <mutex>
#include <numbers>
#include <sstream>

namespace quasidim {

namespace {

constexpr double kPi = std::numbers::pi;

std::mutex& fftw_mutex() {
  static std::mutex m;
  return m;
}

// c_j = (1/m) sum_k d_k exp(-i j theta_k), j = 0 .. m/2 - 1.
std::vector<cplx> forward_coefficients(std::span<const double> d) {
  const std::size_t m = d.size();
  std::vector<double> in(d.begin(), d.end());
  std::vector<cplx> out(m / 2 + 1);
  fftw_plan plan;
  {
    std::lock_guard lock(fftw_mutex());
    plan = fftw_plan_dft_r2c_1d(static_cast<int>(m), in.data(), reinterpret_cast<fftw_complex*>(out.data()),
                                FFTW_ESTIMATE);
  }
  fftw_execute(plan);
  {
    std::lock_guard lock(fftw_mutex());
    fftw_destroy_plan(plan);
  }
  out.resize(m / 2);
  for (cplx& c : out) c /= static_cast<double>(m);
  return out;
}

// inverse of forward_coefficients for a band-limited density
std::vector<double> density_from_coefficients(std::span<const cplx> c, std::size_t m) {
  std::vector<cplx> in(m / 2 + 1, cplx{});
  std::copy(c.begin(), c.end(), in.begin());
  std::vector<double> out(m);
  fftw_plan plan;
  {
    std::lock_guard lock(fftw_mutex());
    plan = fftw_plan_dft_c2r_1d(static_cast<int>(m), reinterpret_cast<fftw_complex*>(in.data()), out.data(),
                                FFTW_ESTIMATE);
  }
  fftw_execute(plan);
  {
    std::lock_guard lock(fftw_mutex());
    fftw_destroy_plan(plan);
  }
  return out;
}

}  // namespace

HarmonicFn::HarmonicFn(std::vector<double> density) : density_(std::move(density)) {
  const std::size_t m = density_.size();
  if (m < 8 || !std::has_single_bit(m)) throw InvalidArgument("density needs a power-of-two sample count >= 8");
  for (double x : density_) {
    if (!(x >= 0.0) || !std::isfinite(x)) throw InvalidArgument("density must be finite and nonnegative");
  }
  coeffs_ = forward_coefficients(density_);
  if (!(coeffs_[0].real() > 0.0)) throw InvalidArgument("density must have a positive mean");
}

cplx HarmonicFn::analytic(cplx z) const {
  if (std::abs(z) > 0.999) {
    std::ostringstream msg;
    msg << "harmonic evaluation at |z| = " << std::abs(z) << " is too close to the circle";
    throw InvalidArgument(msg.str());
  }
  cplx acc{};
  for (std::size_t j = coeffs_.size() - 1; j >= 1; --j) acc = (acc + 2.0 * coeffs_[j]) * z;
  return cplx{coeffs_[0].real(), 0.0} + acc;
}

double HarmonicFn::operator()(cplx z) const { return analytic(z).real(); }

double poisson_quadrature(const HarmonicFn& h, cplx z) {
  if (!(std::abs(z) < 1.0)) throw InvalidArgument("poisson_quadrature: |z| must be < 1");
  const auto d = h.density();
  const double m = static_cast<double>(d.size());
  const double r2 = std::norm(z);
  double s = 0.0;
  for (std::size_t k = 0; k < d.size(); ++k) {
    const cplx e = std::polar(1.0, 2.0 * kPi * static_cast<double>(k) / m);
    s += d[k] * (1.0 - r2) / std::norm(e - z);
  }
  return s / m;
}

cplx gradient_at_zero(const HarmonicFn& h) { return 2.0 * std::conj(h.coefficients()[1]); }

ConjugateFn conjugate(const HarmonicFn& h) { return ConjugateFn(h); }

HarmonicFn symmetrize(const HarmonicFn& h, double direction) {
  const auto c = h.coefficients();
  const double c0 = c[0].real();
  std::vector<cplx> s(c.size());
  for (std::size_t j = 0; j < c.size(); ++j) {
    const cplx rot = std::polar(1.0, -2.0 * static_cast<double>(j) * direction);
    s[j] = (c[j] + std::conj(c[j]) * rot) / (2.0 * c0);
  }
  auto density = density_from_coefficients(s, h.samples());
  // c2r output of a band-limited nonnegative density may dip below 0 by rounding
  for (double& x : density) x = std::max(x, 0.0);
  return HarmonicFn(std::move(density));
}

cplx schwarz_witness(const HarmonicFn& h, cplx lambda) {
  if (std::abs(h(0.0) - 1.0) > 1e-10) throw InvalidArgument("schwarz_witness: h(0) must be 1");
  if (std::abs(gradient_at_zero(h)) > 1e-10) throw InvalidArgument("schwarz_witness: grad h(0) must vanish");
  const cplx g = h.analytic(lambda);
  if (std::abs(g + 1.0) < 1e-300) throw ContractViolation("schwarz_witness: h + i h~ = -1");
  return (g - 1.0) / (g + 1.0);
}

namespace {

HarnackCheck bound_check(double h0, double hl, double lower, double upper, double tol) {
  HarnackCheck c;
  c.h0 = h0;
  c.h_lambda = hl;
  c.lower_factor = lower;
  c.upper_factor = upper;
  c.lower_slack = h0 - lower * hl;
  c.upper_slack = upper * hl - h0;
  c.holds = c.lower_slack >= -tol && c.upper_slack >= -tol;
  return c;
}

}  // namespace

HarnackCheck symmetric_bound(double h0, double h_lambda, double r, double tolerance) {
  if (!(r >= 0.0 && r < 1.0)) throw InvalidArgument("|lambda| must lie in [0, 1)");
  const double r2 = r * r;
  return bound_check(h0, h_lambda, (1.0 - r2) / (1.0 + r2), (1.0 + r2) / (1.0 - r2), tolerance);
}

HarnackCheck classical_bound(double h0, double h_lambda, double r, double tolerance) {
  if (!(r >= 0.0 && r < 1.0)) throw InvalidArgument("|lambda| must lie in [0, 1)");
  return bound_check(h0, h_lambda, (1.0 - r) / (1.0 + r), (1.0 + r) / (1.0 - r), tolerance);
}

HarnackCheck verify_symmetric_harnack(const HarmonicFn& h, cplx lambda) {
  const double h0 = h(0.0);
  const double r = std::abs(lambda);
  if (r > 0.0) {
    const cplx grad = gradient_at_zero(h);
    const double directional = (std::conj(lambda / r) * grad).real();
    if (std::abs(directional) > 1e-10 * h0) {
      std::ostringstream msg;
      msg << "verify_symmetric_harnack: derivative along lambda is " << directional << ", not 0";
      throw InvalidArgument(msg.str());
    }
  }
  return symmetric_bound(h0, h(lambda), r);
}

std::vector<double> random_density(std::mt19937_64& rng, std::size_t m, int degree, double min_value) {
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::vector<double> amp(static_cast<std::size_t>(degree)), phase(static_cast<std::size_t>(degree));
  for (int j = 0; j < degree; ++j) {
    amp[j] = unit(rng) / (1.0 + j);
    phase[j] = 2.0 * kPi * unit(rng);
  }
  std::vector<double> osc(m, 0.0);
  for (std::size_t k = 0; k < m; ++k) {
    const double t = 2.0 * kPi * static_cast<double>(k) / static_cast<double>(m);
    for (int j = 0; j < degree; ++j) osc[k] += amp[j] * std::cos((j + 1) * t - phase[j]);
  }
  const double lo = *std::min_element(osc.begin(), osc.end());
  // 1 + s * lo >= min_value
  const double s = lo < 0.0 ? std::min(1.0, (1.0 - min_value) / -lo) : 1.0;
  for (double& x : osc) x = 1.0 + s * x;
  return osc;
}

bool CampaignSummary::ok() const {
  return violations == 0 && schwarz_violations == 0 && classical_violations == 0 && probe_failed_as_expected;
}

CampaignSummary run_harnack_campaign(const CampaignOptions& options) {
  CampaignSummary sum;
  sum.seed = options.seed;
  sum.worst_lower_slack = sum.worst_upper_slack = sum.worst_schwarz_slack =
      std::numeric_limits<double>::infinity();
  std::mt19937_64 rng(options.seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (std::size_t d = 0; d < options.densities; ++d) {
    // near-zero minima make the comparison sharper
    const double floor = 1e-3 * unit(rng);
    const HarmonicFn h(random_density(rng, options.samples, options.degree, floor));
    ++sum.densities;
    const cplx grad = gradient_at_zero(h);
    // a direction orthogonal to the gradient (any direction if it vanishes)
    const cplx dir = std::abs(grad) > 0.0 ? cplx{0.0, 1.0} * grad / std::abs(grad) : cplx{1.0, 0.0};
    const HarmonicFn sym = symmetrize(h, std::arg(dir));
    for (const double r : options.radii) {
      for (const double sign : {1.0, -1.0}) {
        const cplx lambda = sign * r * dir;
        const HarnackCheck c = verify_symmetric_harnack(h, lambda);
        ++sum.checks;
        if (!(c.lower_slack >= -options.harnack_slack && c.upper_slack >= -options.harnack_slack)) ++sum.violations;
        sum.worst_lower_slack = std::min(sum.worst_lower_slack, c.lower_slack);
        sum.worst_upper_slack = std::min(sum.worst_upper_slack, c.upper_slack);
        if (!classical_bound(c.h0, c.h_lambda, r, options.harnack_slack).holds) ++sum.classical_violations;

        const cplx f = schwarz_witness(sym, lambda);
        const double slack = r * r - std::abs(f);
        if (slack < -options.schwarz_slack) ++sum.schwarz_violations;
        sum.worst_schwarz_slack = std::min(sum.worst_schwarz_slack, slack);
      }
    }
  }
  sum.probe_failed_as_expected = !subharmonic_probe(cplx{0.6, 0.0}).holds;
  return sum;
}

HarnackCheck subharmonic_probe(cplx lambda, double eps) {
  const auto u = [&](cplx z) { return std::norm(z * z - lambda * lambda) + eps; };
  return symmetric_bound(u(0.0), u(lambda), std::abs(lambda));
}

}  // namespace quasidim
