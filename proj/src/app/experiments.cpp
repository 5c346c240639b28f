#include "quasidim/app/experiments.hpp"

#include "quasidim/error.hpp"
#include "quasidim/grid_io.hpp"
#include "quasidim/motion.hpp"

#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <map>
#include <ostream>
#include <random>
#include <sstream>

namespace quasidim::app {

using nlohmann::json;

namespace {

void say(std::ostream* log, const std::string& line) {
  if (log) *log << line << '\n' << std::flush;
}

std::string fmt(const char* label, double achieved, const char* rel, double bound) {
  std::ostringstream os;
  os << label << " = " << format_number(achieved) << ' ' << rel << ' ' << format_number(bound);
  return os.str();
}

std::string lambda_name(cplx l) {
  std::ostringstream os;
  os << format_number(l.real()) << (l.imag() < 0 ? "-" : "+") << format_number(std::abs(l.imag())) << "i";
  return os.str();
}

json number(double v) { return std::isfinite(v) ? json(v) : json(nullptr); }

void write_json(const std::filesystem::path& path, const json& j) { write_text(path, j.dump(2) + "\n"); }

std::filesystem::path prepare_out(const ExperimentConfig& cfg) {
  std::filesystem::create_directories(cfg.out_dir);
  return cfg.out_dir;
}

double masked_sup_difference(const BeltramiField& a, const BeltramiField& b, std::span<const std::uint8_t> mask) {
  double s = 0.0;
  for (std::size_t i = 0; i < mask.size(); ++i) {
    if (mask[i]) s = std::max(s, std::abs(a[i] - b[i]));
  }
  return s;
}

std::vector<cplx> family_lambdas(const ExperimentConfig& cfg, double k) {
  if (!cfg.lambdas.empty()) return cfg.lambdas;
  if (k == 0.0) return {cplx{0.0, 0.0}};
  return default_lambdas(k);
}

MotionFamily family_for(const ExperimentConfig& cfg, double k, std::uint64_t seed, std::vector<cplx> lambdas) {
  const BeltramiField mu = generate_mu(cfg.grid, generator_at(cfg, k, true), seed);
  FamilyOptions opts;
  opts.solver = cfg.solver;
  if (k == 0.0) {
    // the zero field: every member is the identity, solved once at lambda = 0
    lambdas.erase(std::remove_if(lambdas.begin(), lambdas.end(), [](cplx l) { return l != 0.0; }), lambdas.end());
    if (lambdas.empty()) lambdas.push_back(0.0);
  }
  return build_family(mu, k, cfg.rho, std::move(lambdas), opts);
}

/// Uniform-on-simplex sample.
Distribution random_distribution(std::mt19937_64& rng, std::size_t n) {
  std::exponential_distribution<double> e(1.0);
  std::vector<double> w(n);
  for (double& x : w) x = e(rng);
  return Distribution::from_weights(std::move(w));
}

}  // namespace

std::uint64_t run_seed(const ExperimentConfig& cfg, std::size_t s) { return cfg.seed + s; }

GeneratorSpec generator_at(const ExperimentConfig& cfg, double k, bool antisymmetric) {
  GeneratorSpec spec = cfg.generator;
  spec.k = k;
  spec.antisymmetrize = spec.antisymmetrize || antisymmetric;
  return spec;
}

// ---------------------------------------------------------------- solve

Outcome run_solve(const ExperimentConfig& cfg, std::ostream* log) {
  Outcome out;
  const auto dir = prepare_out(cfg);
  json runs = json::array();
  for (const double k : cfg.k_values) {
    for (std::size_t s = 0; s < cfg.seeds; ++s) {
      const std::uint64_t seed = run_seed(cfg, s);
      const BeltramiField mu = generate_mu(cfg.grid, generator_at(cfg, k, false), seed);
      SolveResult res = solve_detailed(mu, cfg.solver);
      const QcMap map = renormalize_036(res.map);
      const BeltramiField rec = beltrami_of_map(map);
      SolveSummary sum{k, seed, res.stats.iterations, res.stats.residual,
                       masked_sup_difference(mu, rec, interior_mask(map)), cfg.grid.step()};
      if (!(sum.recovery_error <= 5.0 * sum.grid_step)) {
        out.violations.push_back(fmt("solve: mu recovery error", sum.recovery_error, ">", 5.0 * sum.grid_step));
      }
      const std::string stem = "solve_k" + format_number(k) + "_s" + std::to_string(seed);
      write_grid_file(dir / (stem + "_mu.qdim"), cfg.grid, mu.values());
      write_grid_file(dir / (stem + "_map.qdim"), cfg.grid, map.values(),
                      static_cast<std::uint8_t>(map.normalization()));
      out.artifacts.push_back(dir / (stem + "_mu.qdim"));
      out.artifacts.push_back(dir / (stem + "_map.qdim"));
      runs.push_back({{"k", k},
                      {"seed", seed},
                      {"iterations", sum.iterations},
                      {"residual", number(sum.residual)},
                      {"recovery_error", number(sum.recovery_error)},
                      {"grid_step", sum.grid_step},
                      {"map_file", stem + "_map.qdim"},
                      {"mu_file", stem + "_mu.qdim"}});
      say(log, "solve k=" + format_number(k) + " seed=" + std::to_string(seed) + " iterations=" +
                   std::to_string(sum.iterations) + " recovery=" + format_number(sum.recovery_error));
    }
  }
  write_json(dir / "solve.json", {{"n_grid", cfg.grid.n}, {"runs", runs}});
  out.artifacts.push_back(dir / "solve.json");
  return out;
}

// ---------------------------------------------------------------- decompose

std::vector<std::string> decomposition_violations(const BoundsReport& r, const DecomposeLimits& limits) {
  std::vector<std::string> v;
  if (!(r.norm_psi_achieved <= r.norm_psi_bound + limits.norm_slack)) {
    v.push_back(fmt("norm_psi_achieved", r.norm_psi_achieved, ">", r.norm_psi_bound + limits.norm_slack));
  }
  if (!(r.upper_psi_achieved <= limits.symmetry_tol)) {
    v.push_back(fmt("upper_psi_achieved", r.upper_psi_achieved, ">", limits.symmetry_tol));
  }
  if (!(r.norm_phi_achieved <= r.k + limits.norm_slack)) {
    v.push_back(fmt("norm_phi_achieved", r.norm_phi_achieved, ">", r.k + limits.norm_slack));
  }
  if (!(r.anti_residual <= limits.symmetry_tol)) {
    v.push_back(fmt("anti_residual", r.anti_residual, ">", limits.symmetry_tol));
  }
  if (!(r.curve_distance <= limits.curve_steps * r.grid_step)) {
    v.push_back(fmt("curve_distance", r.curve_distance, ">", limits.curve_steps * r.grid_step));
  }
  return v;
}

Outcome run_decompose(const ExperimentConfig& cfg, std::ostream* log) {
  Outcome out;
  const auto dir = prepare_out(cfg);
  DecompositionOptions opts = cfg.decompose;
  opts.solver = cfg.solver;
  opts.enforce_bounds = false;
  const DecomposeLimits limits{2.0 * opts.tol, opts.tol, 10.0};
  json runs = json::array();
  for (const double k : cfg.k_values) {
    for (std::size_t s = 0; s < cfg.seeds; ++s) {
      const std::uint64_t seed = run_seed(cfg, s);
      const BeltramiField mu = generate_mu(cfg.grid, generator_at(cfg, k, false), seed);
      const std::string tag = "decompose k=" + format_number(k) + " seed=" + std::to_string(seed);
      json j;
      try {
        const DecompositionResult d = decompose(mu, opts);
        const BoundsReport& r = d.report;
        for (const auto& v : decomposition_violations(r, limits)) out.violations.push_back(tag + ": " + v);
        j = {{"k", r.k},
             {"seed", seed},
             {"norm_psi_bound", r.norm_psi_bound},
             {"norm_psi_achieved", number(r.norm_psi_achieved)},
             {"upper_psi_achieved", number(r.upper_psi_achieved)},
             {"norm_phi_achieved", number(r.norm_phi_achieved)},
             {"anti_residual", number(r.anti_residual)},
             {"curve_distance", number(r.curve_distance)}};
        say(log, tag + " psi=" + format_number(r.norm_psi_achieved) + " phi=" + format_number(r.norm_phi_achieved) +
                     " anti=" + format_number(r.anti_residual));
      } catch (const ContractViolation& e) {
        out.violations.push_back(tag + ": " + e.what());
        j = {{"k", k}, {"seed", seed}, {"error", e.what()}};
        say(log, tag + " failed: " + e.what());
      }
      runs.push_back(j);
    }
  }
  write_json(dir / "decompose.json", {{"n_grid", cfg.grid.n}, {"tol", opts.tol}, {"runs", runs}});
  out.artifacts.push_back(dir / "decompose.json");
  return out;
}

// ---------------------------------------------------------------- motion

Outcome run_motion(const ExperimentConfig& cfg, std::ostream* log) {
  Outcome out;
  const auto dir = prepare_out(cfg);
  const double k = cfg.k_values.front();
  const std::uint64_t seed = run_seed(cfg, 0);
  const MotionFamily fam = family_for(cfg, k, seed, family_lambdas(cfg, k));
  const SymmetryReport rep = check_symmetries(fam);

  json lambdas = json::array(), files = json::array(), entries = json::array();
  for (std::size_t i = 0; i < fam.lambdas.size(); ++i) {
    const std::string name = "motion_" + std::to_string(i) + ".qdim";
    write_grid_file(dir / name, fam.maps[i].grid(), fam.maps[i].values(),
                    static_cast<std::uint8_t>(fam.maps[i].normalization()));
    out.artifacts.push_back(dir / name);
    lambdas.push_back({fam.lambdas[i].real(), fam.lambdas[i].imag()});
    files.push_back(name);
  }
  for (const SymmetryEntry& e : rep.entries) {
    entries.push_back({{"lambda", {e.lambda.real(), e.lambda.imag()}},
                       {"kind", to_string(e.kind)},
                       {"mu_residual", number(e.mu_residual)},
                       {"map_residual", number(e.map_residual)},
                       {"ok", e.ok}});
    if (!e.ok) {
      out.violations.push_back("motion: symmetry check failed at lambda = " + lambda_name(e.lambda) +
                               " (mu residual " + format_number(e.mu_residual) + ", map residual " +
                               format_number(e.map_residual) + ")");
    }
    say(log, "motion lambda=" + lambda_name(e.lambda) + " " + to_string(e.kind) + (e.ok ? " ok" : " FAILED"));
  }
  write_json(dir / "motion.json", {{"k", fam.k},
                                   {"rho", fam.rho},
                                   {"seed", seed},
                                   {"grid_step", rep.grid_step},
                                   {"lambdas", lambdas},
                                   {"residuals", fam.residuals},
                                   {"files", files},
                                   {"symmetry", entries}});
  out.artifacts.push_back(dir / "motion.json");
  return out;
}

// ---------------------------------------------------------------- thermo

ThermoSummary compute_thermo(const ExperimentConfig& cfg, std::ostream* log) {
  ThermoSummary t;
  t.k = cfg.k_values.front();
  t.rho = cfg.rho;
  t.p = covering_exponent_for(t.k, t.rho);
  t.intervals = cfg.thermo.intervals;
  t.grid_step = cfg.grid.step();
  if (t.k == 0.0) throw InvalidArgument("thermo needs k > 0");

  std::vector<cplx> lambdas = family_lambdas(cfg, t.k);
  const auto has = [&](cplx l) {
    return std::any_of(lambdas.begin(), lambdas.end(), [&](cplx m) { return std::abs(m - l) <= 1e-14; });
  };
  for (const cplx l : {cplx{t.k, 0.0}, cplx{-t.k, 0.0}, cplx{0.0, 0.0}}) {
    if (!has(l)) lambdas.push_back(l);
  }
  std::vector<cplx> centers;
  for (const cplx c : {cplx{0.0, 0.0}, cplx{t.k, 0.0}}) {
    if (std::abs(c) + cfg.thermo.circle_radius <= cfg.rho) centers.push_back(c);
  }
  for (const cplx c : centers) {
    for (const cplx l : lambda_circle(c, cfg.thermo.circle_radius, cfg.thermo.circle_points)) {
      if (!has(l)) lambdas.push_back(l);
    }
  }
  const std::uint64_t seed = run_seed(cfg, 0);
  const MotionFamily fam = family_for(cfg, t.k, seed, lambdas);
  const CoveringData cov = covering_from_family(fam, cfg.thermo.intervals);
  say(log, "thermo: family of " + std::to_string(fam.lambdas.size()) + " members, n = " +
               std::to_string(cov.n()));

  t.qs = quasisymmetry_constant(fam, cfg.thermo.qs_samples, seed);
  t.C = t.qs.C;
  const cplx lk{t.k, 0.0};

  // Jensen and the variational principle at lambda = k
  std::mt19937_64 rng(seed);
  t.min_jensen_gap = INFINITY;
  for (std::size_t i = 0; i < cfg.thermo.random_distributions; ++i) {
    t.min_jensen_gap = std::min(t.min_jensen_gap, jensen_gap(cov, random_distribution(rng, cov.n()), lk, t.p));
  }
  const Distribution g = gibbs(cov, lk, t.p);
  t.gibbs_gap = std::abs(jensen_gap(cov, g, lk, t.p));

  // harmonicity of the Lyapunov exponent in lambda
  const Distribution uni = Distribution::uniform(cov.n());
  for (const cplx c : centers) {
    double mean = 0.0;
    const auto circle = lambda_circle(c, cfg.thermo.circle_radius, cfg.thermo.circle_points);
    for (const cplx l : circle) mean += lyapunov(cov, uni, l);
    mean /= static_cast<double>(circle.size());
    t.mean_value_residual = std::max(t.mean_value_residual, std::abs(mean - lyapunov(cov, uni, c)));
  }

  const auto rk = cov.radii(lk);
  const auto rmk = cov.radii(-lk);
  for (std::size_t j = 0; j < cov.n(); ++j) {
    t.conjugation_residual = std::max(t.conjugation_residual, std::abs(rk[j] - std::conj(rmk[j])));
  }

  t.table = CsvTable({"lambda_re", "lambda_im", "p", "covering_sum", "gibbs_entropy", "lyapunov", "H"});
  const std::vector<double> ps{1.0, 1.0 + t.k * t.k, t.p, 2.0};
  t.min_H = INFINITY;
  for (const cplx l : fam.lambdas) {
    const double H = harnack_functional(cov, g, t.C, l);
    t.min_H = std::min(t.min_H, H);
    t.max_sum_sq = std::max(t.max_sum_sq, covering_sum(cov, l, 2.0));
    for (const double p : ps) {
      const Distribution gl = gibbs(cov, l, p);
      t.table.add_row({format_number(l.real()), format_number(l.imag()), format_number(p),
                       format_number(covering_sum(cov, l, p)), format_number(entropy(gl)),
                       format_number(lyapunov(cov, gl, l)), format_number(H)});
    }
  }
  t.h_even_residual = std::abs(harnack_functional(cov, g, t.C, lk) - harnack_functional(cov, g, t.C, -lk));
  t.h0_margin = harnack_functional(cov, g, t.C, 0.0) - (entropy(g) + 3.0 * std::log(t.C));
  t.final_log_sum = log_covering_sum(cov, lk, t.p);

  auto& v = t.violations;
  if (!(t.min_jensen_gap >= -1e-12)) v.push_back(fmt("thermo: min Jensen gap", t.min_jensen_gap, "<", -1e-12));
  if (!(t.gibbs_gap <= 1e-12)) v.push_back(fmt("thermo: Gibbs Jensen gap", t.gibbs_gap, ">", 1e-12));
  if (!(t.mean_value_residual <= 1e-3)) {
    v.push_back(fmt("thermo: Lyapunov mean-value residual", t.mean_value_residual, ">", 1e-3));
  }
  if (!(t.conjugation_residual <= 10.0 * t.grid_step)) {
    v.push_back(fmt("thermo: r_j(k) vs conj r_j(-k)", t.conjugation_residual, ">", 10.0 * t.grid_step));
  }
  if (!(t.h_even_residual <= 1e-2)) v.push_back(fmt("thermo: |H(k) - H(-k)|", t.h_even_residual, ">", 1e-2));
  if (!(t.min_H >= -0.1)) v.push_back(fmt("thermo: min H", t.min_H, "<", -0.1));
  if (!(t.h0_margin >= -1e-9)) v.push_back(fmt("thermo: H(0) - (I + 3 log C)", t.h0_margin, "<", -1e-9));
  if (!(t.max_sum_sq <= t.C * t.C * t.C)) v.push_back(fmt("thermo: max sum |r_j|^2", t.max_sum_sq, ">", t.C * t.C * t.C));
  if (!(t.final_log_sum <= 12.0 * std::log(t.C) + 0.5)) {
    v.push_back(fmt("thermo: log sum |r_j(k)|^p", t.final_log_sum, ">", 12.0 * std::log(t.C) + 0.5));
  }
  return t;
}

Outcome run_thermo(const ExperimentConfig& cfg, std::ostream* log) {
  Outcome out;
  const auto dir = prepare_out(cfg);
  ThermoSummary t = compute_thermo(cfg, log);
  t.table.write(dir / "thermo.csv");
  out.artifacts.push_back(dir / "thermo.csv");
  write_json(dir / "thermo.json", {{"k", t.k},
                                   {"rho", t.rho},
                                   {"p", t.p},
                                   {"intervals", t.intervals},
                                   {"C", t.C},
                                   {"ratio_bound", t.qs.ratio_bound},
                                   {"separation_bound", t.qs.separation_bound},
                                   {"min_jensen_gap", number(t.min_jensen_gap)},
                                   {"gibbs_gap", number(t.gibbs_gap)},
                                   {"mean_value_residual", number(t.mean_value_residual)},
                                   {"conjugation_residual", number(t.conjugation_residual)},
                                   {"h_even_residual", number(t.h_even_residual)},
                                   {"min_H", number(t.min_H)},
                                   {"h0_margin", number(t.h0_margin)},
                                   {"max_sum_sq", number(t.max_sum_sq)},
                                   {"final_log_sum", number(t.final_log_sum)},
                                   {"twelve_log_C", 12.0 * std::log(t.C)},
                                   {"violations", t.violations}});
  out.artifacts.push_back(dir / "thermo.json");
  say(log, "thermo: C = " + format_number(t.C) + ", min H = " + format_number(t.min_H) +
               ", log sum = " + format_number(t.final_log_sum));
  out.violations = std::move(t.violations);
  return out;
}

// ---------------------------------------------------------------- harnack

Outcome run_harnack(const ExperimentConfig& cfg, std::ostream* log) {
  Outcome out;
  const auto dir = prepare_out(cfg);
  CampaignOptions opts = cfg.harnack;
  opts.seed = cfg.seed;
  const CampaignSummary s = run_harnack_campaign(opts);
  if (s.violations) out.violations.push_back("harnack: " + std::to_string(s.violations) + " symmetric-bound violations");
  if (s.schwarz_violations) {
    out.violations.push_back("harnack: " + std::to_string(s.schwarz_violations) + " Schwarz witness violations");
  }
  if (!s.probe_failed_as_expected) out.violations.push_back("harnack: subharmonic probe did not fail");
  write_json(dir / "harnack.json", {{"seed", s.seed},
                                    {"densities", s.densities},
                                    {"radii", opts.radii},
                                    {"checks", s.checks},
                                    {"violations", s.violations},
                                    {"classical_violations", s.classical_violations},
                                    {"schwarz_violations", s.schwarz_violations},
                                    {"worst_lower_slack", number(s.worst_lower_slack)},
                                    {"worst_upper_slack", number(s.worst_upper_slack)},
                                    {"worst_schwarz_slack", number(s.worst_schwarz_slack)},
                                    {"probe_failed_as_expected", s.probe_failed_as_expected},
                                    {"slack", opts.harnack_slack}});
  out.artifacts.push_back(dir / "harnack.json");
  say(log, "harnack: " + std::to_string(s.checks) + " checks, " + std::to_string(s.violations) + " violations");
  return out;
}

// ---------------------------------------------------------------- sweep

SweepResult compute_sweep(const ExperimentConfig& cfg, std::ostream* log) {
  SweepResult res;
  std::vector<std::size_t> ladder;
  for (int e = cfg.dimension.ladder_min; e <= cfg.dimension.ladder_max; ++e) ladder.push_back(std::size_t{1} << e);

  for (const double k : cfg.k_values) {
    for (std::size_t s = 0; s < cfg.seeds; ++s) {
      SweepRun run;
      run.k = k;
      run.seed = run_seed(cfg, s);
      const MotionFamily fam = family_for(cfg, k, run.seed, family_lambdas(cfg, k));
      const cplx lk{k, 0.0};
      const QcMap& phi = fam.maps[fam.index_of(lk)];
      run.box = box_dimension(map_line(phi, cfg.dimension.curve_points), cfg.dimension.box_coarsest,
                              cfg.dimension.box_finest);
      run.cover = covering_exponent(covering_ladder(phi, lk, ladder), lk);
      run.qs = quasisymmetry_constant(fam, cfg.thermo.qs_samples, run.seed);
      const CoveringData cov = covering_from_family(fam, cfg.thermo.intervals);
      for (const cplx l : fam.lambdas) run.max_sum_sq = std::max(run.max_sum_sq, covering_sum(cov, l, 2.0));
      for (const double rho : cfg.rho_values) {
        run.rho.push_back(rho);
        run.p.push_back(covering_exponent_for(k, rho));
        run.log_sum.push_back(log_covering_sum(cov, lk, run.p.back()));
      }

      const std::string tag = "sweep k=" + format_number(k) + " seed=" + std::to_string(run.seed) + ": ";
      const double bound = 1.0 + k * k + 0.05;
      auto& v = res.violations;
      if (!(run.box.raw <= bound)) v.push_back(tag + fmt("box dimension", run.box.raw, ">", bound));
      if (!(run.cover.raw <= bound)) v.push_back(tag + fmt("covering exponent", run.cover.raw, ">", bound));
      if (!(std::abs(run.box.value - run.cover.value) <= 0.05)) {
        v.push_back(tag + fmt("estimator disagreement", std::abs(run.box.value - run.cover.value), ">", 0.05));
      }
      const double C = run.qs.C;
      if (!(run.max_sum_sq <= C * C * C)) v.push_back(tag + fmt("max sum |r_j|^2", run.max_sum_sq, ">", C * C * C));
      for (std::size_t i = 0; i < run.rho.size(); ++i) {
        if (!(run.log_sum[i] <= 12.0 * std::log(C) + 0.5)) {
          v.push_back(tag + "rho=" + format_number(run.rho[i]) + " " +
                      fmt("log sum", run.log_sum[i], ">", 12.0 * std::log(C) + 0.5));
        }
      }
      say(log, tag + "box " + format_number(run.box.value) + ", cover " + format_number(run.cover.value) + ", C " +
                   format_number(C));
      res.runs.push_back(std::move(run));
    }
  }

  // monotone in k within noise, on the per-k means
  std::map<double, std::pair<double, double>> mean_by_k;
  std::map<double, int> count;
  for (const auto& r : res.runs) {
    mean_by_k[r.k].first += r.box.value;
    mean_by_k[r.k].second += r.cover.value;
    ++count[r.k];
  }
  double prev_box = -INFINITY, prev_cover = -INFINITY;
  for (auto& [k, m] : mean_by_k) {
    const double b = m.first / count[k], c = m.second / count[k];
    if (b < prev_box - 0.03 || c < prev_cover - 0.03) {
      res.violations.push_back("sweep: mean dimension decreases by more than 0.03 at k = " + format_number(k));
    }
    prev_box = std::max(prev_box, b);
    prev_cover = std::max(prev_cover, c);
  }
  return res;
}

CsvTable sweep_table(const SweepResult& r, const ExperimentConfig& cfg) {
  CsvTable t({"k", "rho", "dim_box", "dim_cover", "bound_1k", "bound_37k2", "bound_k2", "n_grid", "seed"});
  for (const auto& run : r.runs) {
    const DimensionBounds b = bounds_table(run.k);
    for (const double rho : run.rho) {
      t.add_row({format_number(run.k), format_number(rho), format_number(run.box.value),
                 format_number(run.cover.value), format_number(b.bound_1k), format_number(b.bound_37k2),
                 format_number(b.bound_k2), std::to_string(cfg.grid.n), std::to_string(run.seed)});
    }
  }
  return t;
}

CsvTable sweep_estimates_table(const SweepResult& r) {
  CsvTable t({"k", "seed", "rho", "p", "log_sum", "twelve_log_C", "C", "box_half_width", "cover_half_width"});
  for (const auto& run : r.runs) {
    for (std::size_t i = 0; i < run.rho.size(); ++i) {
      t.add_row({format_number(run.k), std::to_string(run.seed), format_number(run.rho[i]), format_number(run.p[i]),
                 format_number(run.log_sum[i]), format_number(12.0 * std::log(run.qs.C)), format_number(run.qs.C),
                 format_number(run.box.half_width), format_number(run.cover.half_width)});
    }
  }
  return t;
}

std::string sweep_chart(const SweepResult& r) {
  std::map<double, std::pair<double, double>> sums;
  std::map<double, int> count;
  for (const auto& run : r.runs) {
    sums[run.k].first += run.box.value;
    sums[run.k].second += run.cover.value;
    ++count[run.k];
  }
  Series box{"box counting", "#1f77b4", {}, {}, false, true};
  Series cover{"covering exponent", "#d62728", {}, {}, false, true};
  for (const auto& [k, s] : sums) {
    box.x.push_back(k);
    box.y.push_back(s.first / count[k]);
    cover.x.push_back(k);
    cover.y.push_back(s.second / count[k]);
  }
  Series b1{"1 + k", "#2ca02c", {}, {}, true, false};
  Series b37{"1 + 37k^2", "#9467bd", {}, {}, true, false};
  Series bk2{"1 + k^2", "#ff7f0e", {}, {}, true, false};
  const double k_max = sums.empty() ? 1.0 : std::max(sums.rbegin()->first, 0.05);
  const double k_min = sums.empty() ? 0.0 : std::min(sums.begin()->first, 0.0);
  for (int i = 0; i <= 100; ++i) {
    const double k = k_min + (k_max - k_min) * i / 100.0;
    const DimensionBounds b = bounds_table(k);
    for (Series* s : {&b1, &b37, &bk2}) s->x.push_back(k);
    b1.y.push_back(b.bound_1k);
    b37.y.push_back(b.bound_37k2);
    bk2.y.push_back(b.bound_k2);
  }
  return svg_line_chart("Dimension of the image of [0,1]", "k", "dimension", {box, cover, b1, b37, bk2}, 0.95,
                        2.05);
}

Outcome run_sweep(const ExperimentConfig& cfg, std::ostream* log) {
  Outcome out;
  const auto dir = prepare_out(cfg);
  const SweepResult r = compute_sweep(cfg, log);
  sweep_table(r, cfg).write(dir / "sweep.csv");
  sweep_estimates_table(r).write(dir / "sweep_estimates.csv");
  write_text(dir / "sweep.svg", sweep_chart(r));
  out.artifacts = {dir / "sweep.csv", dir / "sweep_estimates.csv", dir / "sweep.svg"};
  out.violations = r.violations;
  return out;
}

Outcome run(std::string_view subcommand, const ExperimentConfig& cfg, std::ostream* log) {
  if (subcommand == "solve") return run_solve(cfg, log);
  if (subcommand == "decompose") return run_decompose(cfg, log);
  if (subcommand == "motion") return run_motion(cfg, log);
  if (subcommand == "thermo") return run_thermo(cfg, log);
  if (subcommand == "harnack") return run_harnack(cfg, log);
  if (subcommand == "sweep") return run_sweep(cfg, log);
  throw InvalidArgument("unknown subcommand '" + std::string(subcommand) + "'");
}

}  // namespace quasidim::app
