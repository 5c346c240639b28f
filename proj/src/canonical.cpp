#include "quasidim/canonical.hpp"

#include "quasidim/compose.hpp"
#include "quasidim/error.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace quasidim {

namespace {

double masked_sup(const BeltramiField& f, std::span<const std::uint8_t> mask, bool upper_only) {
  const GridSpec& g = f.grid();
  double s = 0.0;
  for (std::size_t r = upper_only ? g.n / 2 : 0; r < g.n; ++r) {
    for (std::size_t c = 0; c < g.n; ++c) {
      const std::size_t i = g.index(r, c);
      if (mask[i]) s = std::max(s, std::abs(f[i]));
    }
  }
  return s;
}

void check(bool ok, const DecompositionOptions& options, const std::string& what) {
  if (!ok && options.enforce_bounds) throw ContractViolation(what);
}

std::string describe(const char* label, double achieved, double bound) {
  std::ostringstream msg;
  msg << label << ": achieved " << achieved << " exceeds " << bound;
  return msg.str();
}

double segment_distance(cplx p, cplx a, cplx b) {
  const cplx ab = b - a;
  const double len2 = std::norm(ab);
  double t = len2 > 0.0 ? ((p - a) * std::conj(ab)).real() / len2 : 0.0;
  t = std::clamp(t, 0.0, 1.0);
  return std::abs(p - (a + t * ab));
}

double directed_hausdorff(const Curve& a, const Curve& b) {
  double worst = 0.0;
  for (const cplx& p : a.points) {
    double best = std::abs(p - b.points.front());
    for (std::size_t j = 0; j + 1 < b.points.size(); ++j) {
      best = std::min(best, segment_distance(p, b.points[j], b.points[j + 1]));
    }
    worst = std::max(worst, best);
  }
  return worst;
}

}  // namespace

double psi_norm_bound(double k) { return 2.0 * k / (1.0 + k * k); }

Step1Result step1(const BeltramiField& eta_mu, const DecompositionOptions& options) {
  const GridSpec& g = eta_mu.grid();
  if (!g.conjugation_symmetric()) throw InvalidArgument("step1: grid must be conjugation symmetric");
  const BeltramiField mu_A = ellipse_to_mu(build_A(mu_to_ellipse(eta_mu)));
  QcMap eta = solve_normalized(eta_mu, options.solver);
  QcMap alpha = solve_normalized(mu_A, options.solver);
  QcMap psi = compose_inverse(eta, alpha);
  auto mask = interior_mask(psi);
  BeltramiField mu_psi = beltrami_of_map(psi);

  const double k = eta_mu.norm_bound();
  check(masked_sup(mu_psi, mask, false) <= psi_norm_bound(k) + options.tol, options,
        describe("step1 ||mu_psi||", masked_sup(mu_psi, mask, false), psi_norm_bound(k) + options.tol));
  check(masked_sup(mu_psi, mask, true) <= options.tol, options,
        describe("step1 mu_psi above the axis", masked_sup(mu_psi, mask, true), options.tol));
  return {std::move(eta), std::move(alpha), std::move(psi), std::move(mu_psi), std::move(mask)};
}

Step2Result step2(const QcMap& psi, const BeltramiField& psi_mu, std::span<const std::uint8_t> psi_mask,
                  const DecompositionOptions& options) {
  const GridSpec& g = psi_mu.grid();
  if (!g.conjugation_symmetric()) throw InvalidArgument("step2: grid must be conjugation symmetric");
  if (psi_mask.size() != g.size()) throw InvalidArgument("step2: mask size mismatch");
  const double upper = masked_sup(psi_mu, psi_mask, true);
  if (upper > options.tol) {
    throw ContractViolation(describe("step2 precondition: mu_psi above the axis", upper, options.tol));
  }
  const EllipseField M = mu_to_ellipse(psi_mu);
  // tolerance on |mu| translated to eccentricity
  const double circle_tol = 2.0 * options.tol / (1.0 - options.tol);
  const BeltramiField mu_B = ellipse_to_mu(build_B(M, circle_tol));
  QcMap beta = solve_normalized(mu_B, options.solver);
  QcMap phi = compose_inverse(psi, beta);
  auto mask = interior_mask(phi);
  BeltramiField mu_phi = beltrami_of_map(phi);

  // ||M|| -> sqrt: the bound on phi, expressed as a coefficient norm
  double sup_lower = 0.0;
  for (std::size_t r = 0; r < g.n / 2; ++r)
    for (std::size_t c = 0; c < g.n; ++c) sup_lower = std::max(sup_lower, M.eccentricity(g.index(r, c)));
  const double k_phi = K_to_k(std::sqrt(sup_lower));
  const double norm_phi = masked_sup(mu_phi, mask, false);
  check(norm_phi <= k_phi + options.tol, options, describe("step2 ||mu_phi||", norm_phi, k_phi + options.tol));
  const double anti = symmetry_residuals(mu_phi, mask).anti;
  check(anti <= options.tol, options, describe("step2 antisymmetry residual", anti, options.tol));
  return {std::move(beta), std::move(phi), std::move(mu_phi), std::move(mask)};
}

DecompositionResult decompose(const BeltramiField& eta_mu, const DecompositionOptions& options) {
  Step1Result s1 = step1(eta_mu, options);
  Step2Result s2 = step2(s1.psi, s1.mu_psi, s1.mask, options);

  BoundsReport rep;
  rep.k = eta_mu.norm_bound();
  rep.K = k_to_K(rep.k);
  rep.K_prime = rep.K * rep.K;
  rep.norm_psi_bound = psi_norm_bound(rep.k);
  rep.norm_psi_achieved = masked_sup(s1.mu_psi, s1.mask, false);
  rep.upper_psi_achieved = masked_sup(s1.mu_psi, s1.mask, true);
  rep.norm_phi_achieved = masked_sup(s2.mu_phi, s2.mask, false);
  const auto res = symmetry_residuals(s2.mu_phi, s2.mask);
  rep.anti_residual = res.anti;
  rep.symm_residual = res.symm;
  rep.grid_step = eta_mu.grid().step();

  DecompositionResult out{std::move(s1.eta), std::move(s1.alpha), std::move(s1.psi),
                          std::move(s2.beta), std::move(s2.phi),  std::move(s1.mu_psi),
                          std::move(s2.mu_phi), rep};
  out.report.curve_distance = verify_same_quasiline(out, options.curve_points);
  check(out.report.curve_distance <= 10.0 * rep.grid_step, options,
        describe("curve distance", out.report.curve_distance, 10.0 * rep.grid_step));
  return out;
}

double hausdorff_distance(const Curve& a, const Curve& b) {
  a.validate();
  b.validate();
  return std::max(directed_hausdorff(a, b), directed_hausdorff(b, a));
}

double verify_same_quasiline(const DecompositionResult& d, std::size_t n_points) {
  const Curve ce = map_line(d.eta, n_points);
  const Curve cp = map_line(d.psi, n_points);
  const Curve cf = map_line(d.phi, n_points);
  return std::max({hausdorff_distance(ce, cp), hausdorff_distance(ce, cf), hausdorff_distance(cp, cf)});
}

}  // namespace quasidim
