#include "support.hpp"

#include "quasidim/canonical.hpp"
#include "quasidim/error.hpp"
#include "quasidim/generators.hpp"

#include <doctest.h>

using namespace quasidim;

namespace {

const GridSpec G = qt::grid(512, 16.0);

BeltramiField generic(double k, std::uint64_t seed) {
  GeneratorSpec spec;
  spec.k = k;
  spec.axis_clearance = 0.5;
  return generate_mu(G, spec, seed);
}

// amplitude * smooth bump centered below the axis, vanishing for y > -0.2
BeltramiField lower_bump(double amplitude) {
  const auto b = smooth_bump(G, {0.5, -1.6}, 1.4);
  std::vector<cplx> v(G.size());
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = amplitude * b[i];
  return {G, std::move(v)};
}

double masked_diff(const BeltramiField& a, const BeltramiField& b, std::span<const std::uint8_t> mask) {
  double e = 0.0;
  for (std::size_t i = 0; i < mask.size(); ++i) {
    if (mask[i]) e = std::max(e, std::abs(a[i] - b[i]));
  }
  return e;
}

}  // namespace

TEST_CASE("hausdorff distance of polylines") {
  const Curve a{{0.0, 1.0}, "a"};
  const Curve b{{cplx(0, 0.5), cplx(1, 0.5)}, "b"};
  CHECK(hausdorff_distance(a, b) == doctest::Approx(0.5));
  const Curve c{{0.0, 0.5, 1.0}, "c"};
  CHECK(hausdorff_distance(a, c) == 0.0);
  CHECK(psi_norm_bound(1.0 / 3.0) == doctest::Approx(0.6));
}

TEST_CASE("zero coefficient decomposes trivially") {
  const DecompositionResult d = decompose(BeltramiField::zero(G));
  for (std::size_t i = 0; i < G.size(); i += 97) {
    CHECK(std::abs(d.alpha.values()[i] - G.point(i)) < 1e-12);
    CHECK(std::abs(d.beta.values()[i] - G.point(i)) < 1e-12);
  }
  CHECK(d.report.norm_psi_achieved < 1e-9);
  CHECK(d.report.norm_phi_achieved < 1e-9);
  CHECK(d.report.curve_distance < 1e-9);
}

TEST_CASE("bump below the axis: alpha is trivial and mu_psi = mu_eta") {
  const BeltramiField mu = lower_bump(0.5);
  const Step1Result s = step1(mu);
  for (std::size_t i = 0; i < G.size(); i += 101) CHECK(std::abs(s.alpha.values()[i] - G.point(i)) < 1e-9);
  CHECK(masked_diff(s.mu_psi, mu, s.mask) < 0.01);
  double sup = 0.0;
  for (std::size_t i = 0; i < G.size(); ++i) {
    if (s.mask[i]) sup = std::max(sup, std::abs(s.mu_psi[i]));
  }
  CHECK(sup <= 0.8 + 0.01);
}

TEST_CASE("step2 from a lower bump of amplitude 0.8") {
  // eccentricity 9 at the peak, 3 after the square root: |mu_phi| = 0.5
  CHECK(ellipse_of(0.8).eccentricity == doctest::Approx(9.0));
  CHECK(std::abs(mu_of({3.0, ellipse_of(0.8).orientation})) == doctest::Approx(0.5));

  const BeltramiField mu = lower_bump(0.8);
  const QcMap psi = solve_normalized(mu);
  const Step2Result s = step2(psi, mu, interior_mask(psi));
  double sup = 0.0;
  for (std::size_t i = 0; i < G.size(); ++i) {
    if (s.mask[i]) sup = std::max(sup, std::abs(s.mu_phi[i]));
  }
  CHECK(sup == doctest::Approx(0.5).epsilon(0.04));
  const auto res = symmetry_residuals(s.mu_phi, s.mask);
  CHECK(res.anti <= 0.01);
  CHECK(res.symm > 0.5);
}

TEST_CASE("step2 of the identity") {
  const QcMap psi = solve_normalized(BeltramiField::zero(G));
  const Step2Result s = step2(psi, BeltramiField::zero(G), interior_mask(psi));
  for (std::size_t i = 0; i < G.size(); i += 89) CHECK(std::abs(s.phi.values()[i] - G.point(i)) < 1e-12);
}

TEST_CASE("step2 precondition") {
  const BeltramiField mu = generic(0.3, 4);
  const QcMap psi = solve_normalized(mu);
  CHECK_THROWS_AS(step2(psi, mu, interior_mask(psi)), ContractViolation);
}

TEST_CASE("generic k = 1/3 and k = 0.3 fields") {
  for (const std::uint64_t seed : {1u, 2u}) {
    const double k = seed == 1 ? 1.0 / 3.0 : 0.3;
    const DecompositionResult d = decompose(generic(k, seed));
    const BoundsReport& r = d.report;
    CAPTURE(k);
    CHECK(r.K_prime == doctest::Approx(r.K * r.K));
    CHECK(r.norm_psi_achieved <= psi_norm_bound(k) + 0.01);
    CHECK(r.upper_psi_achieved <= 0.01);
    CHECK(r.norm_phi_achieved <= k + 0.01);
    CHECK(r.anti_residual <= 0.01);
    CHECK(r.symm_residual > 10 * r.anti_residual);
    CHECK(r.curve_distance <= 10.0 * G.step());
    if (seed == 1) CHECK(r.norm_psi_bound == doctest::Approx(0.6));
  }
}

TEST_CASE("real symmetric eta keeps all three curves on the real line") {
  std::vector<cplx> v(G.size());
  const auto b = smooth_bump(G, {0.4, 0.0}, 2.0);
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = 0.3 * b[i];
  const DecompositionResult d = decompose(BeltramiField(G, v));
  CHECK(d.report.curve_distance <= 10.0 * G.step());
  for (const QcMap* m : {&d.eta, &d.psi, &d.phi}) {
    for (const cplx p : map_line(*m, 65).points) CHECK(std::abs(p.imag()) <= 5.0 * G.step());
  }
}

TEST_CASE("decomposing mu_phi again is idempotent") {
  const DecompositionResult d = decompose(generic(0.3, 1));
  const DecompositionResult e = decompose(d.mu_phi);
  CHECK(e.report.anti_residual <= 0.01);
  CHECK(std::abs(e.report.norm_phi_achieved - d.report.norm_phi_achieved) <= 0.01);
}
