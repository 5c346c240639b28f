#pragma once

// Experiment configuration: an INI-style text file of `key = value` lines
// grouped under [section] headers. '#' and ';' start comments. Lists are
// comma-separated; complex numbers are written 0.3, -0.2i or 0.1+0.2i.

#include "quasidim/canonical.hpp"
#include "quasidim/error.hpp"
#include "quasidim/generators.hpp"
#include "quasidim/harnack.hpp"

#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

namespace quasidim::app {

/// Parse error with a 1-based source position.
class ConfigError : public FormatError {
 public:
  ConfigError(const std::string& what, std::size_t line, std::size_t column);
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

struct ThermoSettings {
  std::size_t intervals = 256;
  std::size_t qs_samples = 2000;
  double circle_radius = 0.1;
  std::size_t circle_points = 8;
  std::size_t random_distributions = 100;
};

struct DimensionSettings {
  int box_coarsest = 4;
  int box_finest = 10;
  int ladder_min = 5;
  int ladder_max = 12;
  std::size_t curve_points = 16385;
};

struct ExperimentConfig {
  std::uint64_t seed = 1;
  std::size_t seeds = 1;
  GridSpec grid{{0.0, 0.0}, 16.0, 256};
  GeneratorSpec generator;
  std::vector<double> k_values{0.3};
  double rho = 0.9;
  std::vector<double> rho_values{0.7, 0.9, 0.99};
  std::vector<cplx> lambdas;  ///< empty: {0, +-k, +-ik}
  SolverOptions solver;
  DecompositionOptions decompose;
  ThermoSettings thermo;
  CampaignOptions harnack;
  DimensionSettings dimension;
  std::filesystem::path out_dir = "out";

  /// Throws InvalidArgument on inconsistent values (k >= 1, rho outside (0, 1), ...).
  void validate() const;
};

ExperimentConfig parse_config(std::string_view text);
ExperimentConfig load_config(const std::filesystem::path& path);

/// Parses "a", "bi", "a+bi", "a-bi"; throws InvalidArgument.
cplx parse_complex(std::string_view text);

}  // namespace quasidim::app
