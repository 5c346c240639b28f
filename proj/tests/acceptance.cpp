// Acceptance run: one PASS/FAIL line per criterion, exit 1 if any fails.
// Uses the configs shipped in configs/ so the numbers match the CLI.

#include "quasidim/app/experiments.hpp"
#include "quasidim/canonical.hpp"
#include "quasidim/error.hpp"
#include "quasidim/generators.hpp"
#include "quasidim/harnack.hpp"
#include "quasidim/motion.hpp"
#include "quasidim/solver.hpp"
#include "quasidim/spectral.hpp"
#include "quasidim/thermo.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

using namespace quasidim;
using namespace quasidim::app;

namespace {

const std::filesystem::path config_dir = QUASIDIM_CONFIG_DIR;

struct Verdict {
  bool pass = true;
  std::ostringstream detail;
  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      detail << " [fail: " << what << "]";
    }
  }
};

std::string num(double x) { return format_number(x); }

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

// max over the lattice {c / m : sum c = m} of -sum nu log nu + p sum nu log r
double simplex_max(const std::vector<double>& r, double p, int m) {
  const std::size_t n = r.size();
  std::vector<int> c(n, 0);
  double best = -INFINITY;
  const std::function<void(std::size_t, int)> visit = [&](std::size_t j, int left) {
    if (j + 1 == n) {
      c[j] = left;
      double v = 0.0;
      for (std::size_t i = 0; i < n; ++i) {
        if (c[i] == 0) continue;
        const double nu = static_cast<double>(c[i]) / m;
        v += -nu * std::log(nu) + p * nu * std::log(r[i]);
      }
      best = std::max(best, v);
      return;
    }
    for (int x = 0; x <= left; ++x) {
      c[j] = x;
      visit(j + 1, left - x);
    }
  };
  visit(0, m);
  return best;
}

double gauss(cplx z) { return std::exp(-std::norm(z)); }

Verdict criterion1() {
  Verdict v;
  const ExperimentConfig cfg = load_config(config_dir / "decompose.ini");
  DecompositionOptions opts = cfg.decompose;
  opts.solver = cfg.solver;
  opts.enforce_bounds = false;
  std::size_t runs = 0;
  for (const double k : cfg.k_values) {
    const auto t0 = std::chrono::steady_clock::now();
    double psi = -INFINITY, phi = -INFINITY, upper = 0, anti = 0, curve = 0;
    const double h = cfg.grid.step();
    for (std::size_t s = 0; s < cfg.seeds; ++s) {
      const std::uint64_t seed = run_seed(cfg, s);
      const std::string tag = "k=" + num(k) + " seed=" + std::to_string(seed);
      try {
        const BoundsReport r = decompose(generate_mu(cfg.grid, generator_at(cfg, k, false), seed), opts).report;
        v.require(r.norm_psi_achieved <= 2 * k / (1 + k * k) + 0.02, tag + " psi norm " + num(r.norm_psi_achieved));
        v.require(r.upper_psi_achieved <= 0.01, tag + " psi upper " + num(r.upper_psi_achieved));
        v.require(r.anti_residual <= 0.01, tag + " anti " + num(r.anti_residual));
        v.require(r.norm_phi_achieved <= k + 0.02, tag + " phi norm " + num(r.norm_phi_achieved));
        v.require(r.curve_distance <= 10 * h, tag + " curve " + num(r.curve_distance));
        psi = std::max(psi, r.norm_psi_achieved - 2 * k / (1 + k * k));
        upper = std::max(upper, r.upper_psi_achieved);
        anti = std::max(anti, r.anti_residual);
        phi = std::max(phi, r.norm_phi_achieved - k);
        curve = std::max(curve, r.curve_distance / h);
      } catch (const Error& e) {
        v.require(false, tag + " " + e.what());
      }
      ++runs;
    }
    const double t = seconds_since(t0);
    v.require(t <= 600, "k=" + num(k) + " took " + num(t) + " s");
    v.detail << " k=" << num(k) << "{psi-bound " << num(psi) << ", upper " << num(upper) << ", anti " << num(anti)
             << ", phi-k " << num(phi) << ", curve/h " << num(curve) << ", " << num(std::round(t)) << " s}";
  }
  v.detail << " runs=" << runs << " n=" << cfg.grid.n;
  return v;
}

Verdict criterion2() {
  Verdict v;
  const ExperimentConfig cfg = load_config(config_dir / "harnack.ini");
  const auto t0 = std::chrono::steady_clock::now();
  CampaignOptions opts = cfg.harnack;
  const CampaignSummary s = run_harnack_campaign(opts);
  const double t = seconds_since(t0);
  v.require(opts.densities == 200 && opts.harnack_slack <= 1e-8 && opts.schwarz_slack <= 1e-6, "campaign settings");
  v.require(s.violations == 0, std::to_string(s.violations) + " Harnack violations");
  v.require(s.schwarz_violations == 0, std::to_string(s.schwarz_violations) + " Schwarz violations");
  v.require(s.probe_failed_as_expected, "probe held");
  const HarnackCheck probe = subharmonic_probe(cplx(0.0, 0.6));
  v.require(!probe.holds, "direct probe held");
  v.require(t <= 60, "took " + num(t) + " s");
  v.detail << " densities=" << s.densities << " checks=" << s.checks << " violations=" << s.violations
           << " schwarz_violations=" << s.schwarz_violations << " worst_schwarz_slack=" << num(s.worst_schwarz_slack)
           << " probe_upper_slack=" << num(probe.upper_slack) << " time=" << num(t) << "s";
  return v;
}

// thermo summary shared by criteria 3 and 4
const ThermoSummary& thermo_summary() {
  static const ThermoSummary s = compute_thermo(load_config(config_dir / "thermo.ini"), nullptr);
  return s;
}

Verdict criterion3() {
  Verdict v;
  const ExperimentConfig cfg = load_config(config_dir / "thermo.ini");
  const ThermoSummary& s = thermo_summary();
  v.require(cfg.thermo.random_distributions >= 100, "fewer than 100 distributions");
  v.require(s.min_jensen_gap >= -1e-12, "Jensen gap " + num(s.min_jensen_gap));
  v.require(s.mean_value_residual <= 1e-3, "mean value " + num(s.mean_value_residual));
  v.require(cfg.thermo.circle_radius == 0.1, "circle radius");

  // Gibbs against the brute-force simplex maximum on motion radii
  const double k = cfg.k_values.front();
  const BeltramiField mu = generate_mu(cfg.grid, generator_at(cfg, k, true), run_seed(cfg, 0));
  const MotionFamily fam = build_family(mu, k, cfg.rho, {0.0, cplx(k, 0.0)});
  const double p = covering_exponent_for(k, cfg.rho);
  double worst = 0.0, worst_excess = -INFINITY;
  for (std::size_t n = 2; n <= 6; ++n) {
    const CoveringData c = covering_from_family(fam, n);
    std::vector<double> r;
    for (const cplx x : c.radii(k)) r.push_back(std::abs(x));
    const double sup = log_covering_sum(c, k, p);
    const double gibbs_value = variational_value(c, gibbs(c, k, p), k, p);
    const double lattice = simplex_max(r, p, 50);
    v.require(std::abs(gibbs_value - sup) <= 1e-12, "Gibbs value n=" + std::to_string(n));
    v.require(lattice <= sup + 1e-12, "lattice beats Gibbs at n=" + std::to_string(n));
    worst_excess = std::max(worst_excess, lattice - sup);
    if (n <= 5) {
      v.require(sup - lattice <= 1e-3, "brute force gap " + num(sup - lattice) + " at n=" + std::to_string(n));
      worst = std::max(worst, sup - lattice);
    }
  }
  v.detail << " min_jensen_gap=" << num(s.min_jensen_gap) << " gibbs_gap=" << num(s.gibbs_gap)
           << " brute_force_gap(n<=5)=" << num(worst) << " lattice_excess(n<=6)=" << num(worst_excess)
           << " mean_value_residual=" << num(s.mean_value_residual);
  return v;
}

Verdict criterion4() {
  Verdict v;
  const ExperimentConfig cfg = load_config(config_dir / "motion.ini");
  const double k = cfg.k_values.front();
  const BeltramiField mu = generate_mu(cfg.grid, generator_at(cfg, k, true), run_seed(cfg, 0));
  const MotionFamily fam = build_family(mu, k, cfg.rho, cfg.lambdas);
  const SymmetryReport rep = check_symmetries(fam);
  double conj_law = 0.0, real_line = 0.0;
  std::size_t real_checked = 0, imag_checked = 0;
  for (const SymmetryEntry& e : rep.entries) {
    if (e.kind == LambdaKind::real && std::isfinite(e.map_residual)) {
      conj_law = std::max(conj_law, e.map_residual);
      ++real_checked;
      v.require(e.map_residual <= 10 * rep.grid_step, "conjugation law " + num(e.map_residual));
    }
    if (e.kind == LambdaKind::imaginary) {
      real_line = std::max(real_line, e.map_residual);
      ++imag_checked;
      v.require(e.map_residual <= 5 * rep.grid_step, "real line " + num(e.map_residual));
    }
    v.require(e.ok, "symmetry entry");
  }
  v.require(real_checked > 0 && imag_checked > 0, "no symmetric pairs sampled");
  const ThermoSummary& s = thermo_summary();
  v.require(s.h_even_residual <= 1e-2, "H even " + num(s.h_even_residual));
  v.require(s.min_H >= -0.1, "min H " + num(s.min_H));
  v.detail << " conjugation/h=" << num(conj_law / rep.grid_step) << " real_line/h=" << num(real_line / rep.grid_step)
           << " h_even=" << num(s.h_even_residual) << " min_H=" << num(s.min_H) << " C=" << num(s.C);
  return v;
}

// sweep shared by criteria 5 and 7
const SweepResult& sweep_result() {
  static const SweepResult r = compute_sweep(load_config(config_dir / "sweep.ini"), nullptr);
  return r;
}

Verdict criterion5() {
  Verdict v;
  const ExperimentConfig cfg = load_config(config_dir / "sweep.ini");
  const SweepResult& r = sweep_result();
  v.require(r.runs.size() == 25, "expected 25 runs, got " + std::to_string(r.runs.size()));
  double margin = INFINITY, estimate_margin = INFINITY;
  for (const SweepRun& run : r.runs) {
    const std::string tag = "k=" + num(run.k) + " seed=" + std::to_string(run.seed);
    const double bound = 1 + run.k * run.k + 0.05;
    v.require(run.box.raw <= bound, tag + " box " + num(run.box.raw));
    v.require(run.cover.raw <= bound, tag + " cover " + num(run.cover.raw));
    margin = std::min({margin, bound - run.box.raw, bound - run.cover.raw});
    bool found = false;
    for (std::size_t i = 0; i < run.rho.size(); ++i) {
      if (run.rho[i] != 0.9) continue;
      found = true;
      const double rhs = 12 * std::log(run.qs.C) + 0.5;
      v.require(run.log_sum[i] <= rhs, tag + " log sum " + num(run.log_sum[i]));
      estimate_margin = std::min(estimate_margin, rhs - run.log_sum[i]);
    }
    v.require(found, tag + " no rho = 0.9 estimate");
  }
  v.require(cfg.grid.n == 512 && cfg.seeds == 5, "sweep settings");
  v.detail << " runs=" << r.runs.size() << " min_dimension_margin=" << num(margin)
           << " min_estimate_margin=" << num(estimate_margin);
  return v;
}

Verdict criterion6() {
  Verdict v;
  {
    GridSpec g;
    g.n = 256;
    g.half_width = 8.0;
    const cplx a(0.2, 0.1);
    const QcMap m = solve_normalized(BeltramiField(g, std::vector<cplx>(g.size(), a)));
    // z + a conj(z), rescaled to fix 1
    double worst = 0.0;
    for (std::size_t i = 0; i < g.size(); ++i) {
      const cplx z = g.point(i);
      worst = std::max(worst, std::abs(m.values()[i] - (z + a * std::conj(z)) / (1.0 + a)));
    }
    v.require(worst <= 1e-9, "affine " + num(worst));
    v.detail << " affine=" << num(worst);
  }
  {
    GridSpec g;
    g.n = 512;
    g.half_width = 16.0;
    SpectralOperators ops(g);
    std::vector<cplx> dbar(g.size()), out(g.size());
    for (std::size_t i = 0; i < g.size(); ++i) dbar[i] = -g.point(i) * gauss(g.point(i));
    ops.beurling(dbar, out);
    double worst = 0.0;
    for (std::size_t i = 0; i < g.size(); ++i) {
      const cplx z = g.point(i);
      worst = std::max(worst, std::abs(out[i] + std::conj(z) * gauss(z)));
    }
    v.require(worst <= 1e-8, "Beurling " + num(worst));
    v.detail << " beurling=" << num(worst);
  }
  {
    const ExperimentConfig cfg = load_config(config_dir / "solve.ini");
    double worst = 0.0;
    for (const double k : cfg.k_values) {
      const BeltramiField mu = generate_mu(cfg.grid, generator_at(cfg, k, false), run_seed(cfg, 0));
      const QcMap m = solve_normalized(mu, cfg.solver);
      const BeltramiField rec = beltrami_of_map(m);
      const auto mask = interior_mask(m);
      for (std::size_t i = 0; i < mask.size(); ++i) {
        if (mask[i]) worst = std::max(worst, std::abs(rec[i] - mu[i]));
      }
    }
    v.require(worst <= 5 * cfg.grid.step(), "recovery " + num(worst));
    v.detail << " recovery/h=" << num(worst / cfg.grid.step()) << " n=" << cfg.grid.n;
  }
  return v;
}

Verdict criterion7() {
  Verdict v;
  const ExperimentConfig cfg = load_config(config_dir / "sweep.ini");
  const SweepResult& first = sweep_result();
  const SweepResult second = compute_sweep(cfg, nullptr);
  const bool same_dims = sweep_table(first, cfg).str() == sweep_table(second, cfg).str();
  const bool same_estimates = sweep_estimates_table(first).str() == sweep_estimates_table(second).str();
  const bool same_chart = sweep_chart(first) == sweep_chart(second);
  v.require(same_dims, "sweep.csv differs");
  v.require(same_estimates, "sweep_estimates.csv differs");
  v.require(same_chart, "sweep.svg differs");
  v.detail << " bytes=" << sweep_table(first, cfg).str().size();
  return v;
}

}  // namespace

int main() {
  const std::vector<std::pair<int, Verdict (*)()>> criteria{{1, criterion1}, {2, criterion2}, {3, criterion3},
                                                            {4, criterion4}, {5, criterion5}, {6, criterion6},
                                                            {7, criterion7}};
  int failed = 0;
  for (const auto& [id, fn] : criteria) {
    Verdict v;
    const auto t0 = std::chrono::steady_clock::now();
    try {
      v = fn();
    } catch (const std::exception& e) {
      v.pass = false;
      v.detail << " [exception: " << e.what() << "]";
    }
    if (!v.pass) ++failed;
    std::printf("criterion %d: %s%s (%.1f s)\n", id, v.pass ? "PASS" : "FAIL", v.detail.str().c_str(),
                seconds_since(t0));
    std::fflush(stdout);
  }
  return failed == 0 ? 0 : 1;
}
