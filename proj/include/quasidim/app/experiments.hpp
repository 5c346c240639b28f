#pragma once

// Subcommand pipelines. Each compute_* function does the numerical work and
// collects invariant violations; the run_* wrappers also write artifacts
// into config.out_dir. Exit code: 0 clean, 1 on any violation.

#include "quasidim/app/config.hpp"
#include "quasidim/app/output.hpp"
#include "quasidim/dimension.hpp"

#include <iosfwd>
#include <string>
#include <vector>

namespace quasidim::app {

struct Outcome {
  std::vector<std::string> violations;
  std::vector<std::filesystem::path> artifacts;
  int exit_code() const { return violations.empty() ? 0 : 1; }
};

/// Seed of the s-th run: config.seed + s.
std::uint64_t run_seed(const ExperimentConfig& cfg, std::size_t s);

/// The generator spec at norm k.
GeneratorSpec generator_at(const ExperimentConfig& cfg, double k, bool antisymmetric);

struct SolveSummary {
  double k = 0.0;
  std::uint64_t seed = 0;
  int iterations = 0;
  double residual = 0.0;
  double recovery_error = 0.0;  ///< sup |mu - mu recovered| over the interior
  double grid_step = 0.0;
};

struct DecomposeRun {
  BoundsReport report;
  std::uint64_t seed = 0;
  std::string error;  ///< non-empty when a step threw
};

struct DecomposeLimits {
  double norm_slack = 0.02;
  double symmetry_tol = 0.01;
  double curve_steps = 10.0;
};

/// Bound checks of one decomposition, as messages.
std::vector<std::string> decomposition_violations(const BoundsReport& r, const DecomposeLimits& limits);

struct ThermoSummary {
  double k = 0.0, rho = 0.0, p = 0.0, C = 1.0;
  QuasisymmetryEstimate qs;
  std::size_t intervals = 0;
  double min_jensen_gap = 0.0;
  double gibbs_gap = 0.0;                ///< |jensen gap| at the Gibbs distribution
  double mean_value_residual = 0.0;      ///< worst |circle mean - center| of the Lyapunov exponent
  double conjugation_residual = 0.0;     ///< max_j |r_j(k) - conj r_j(-k)|
  double h_even_residual = 0.0;          ///< |H(k) - H(-k)|
  double min_H = 0.0;
  double h0_margin = 0.0;                ///< H(0) - (I + 3 log C)
  double max_sum_sq = 0.0;               ///< max over lambda of sum |r_j|^2
  double final_log_sum = 0.0;            ///< log sum |r_j(k)|^p
  double grid_step = 0.0;
  CsvTable table{{}};
  std::vector<std::string> violations;
};

ThermoSummary compute_thermo(const ExperimentConfig& cfg, std::ostream* log);

struct SweepRun {
  double k = 0.0;
  std::uint64_t seed = 0;
  DimensionEstimate box, cover;
  QuasisymmetryEstimate qs;
  double max_sum_sq = 0.0;
  std::vector<double> rho, p, log_sum;
};

struct SweepResult {
  std::vector<SweepRun> runs;
  std::vector<std::string> violations;
};

SweepResult compute_sweep(const ExperimentConfig& cfg, std::ostream* log);
CsvTable sweep_table(const SweepResult& r, const ExperimentConfig& cfg);
CsvTable sweep_estimates_table(const SweepResult& r);
std::string sweep_chart(const SweepResult& r);

Outcome run_solve(const ExperimentConfig& cfg, std::ostream* log);
Outcome run_decompose(const ExperimentConfig& cfg, std::ostream* log);
Outcome run_motion(const ExperimentConfig& cfg, std::ostream* log);
Outcome run_thermo(const ExperimentConfig& cfg, std::ostream* log);
Outcome run_harnack(const ExperimentConfig& cfg, std::ostream* log);
Outcome run_sweep(const ExperimentConfig& cfg, std::ostream* log);

/// Dispatch by name; throws InvalidArgument for an unknown subcommand.
Outcome run(std::string_view subcommand, const ExperimentConfig& cfg, std::ostream* log);

}  // namespace quasidim::app
