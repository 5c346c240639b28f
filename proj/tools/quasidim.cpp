// quasidim <subcommand> --config <path> [--seed N] [--out DIR] [--grid N] [--quiet]
#include "quasidim/app/experiments.hpp"
#include "quasidim/error.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <optional>

namespace app = quasidim::app;

int main(int argc, char** argv) {
  CLI::App cli{"Quasiconformal maps, quasilines and their dimension"};
  cli.require_subcommand(1);

  std::string config_path;
  std::optional<std::uint64_t> seed;
  std::optional<std::string> out_dir;
  std::optional<std::size_t> grid;
  bool quiet = false;

  const std::vector<std::pair<std::string, std::string>> subcommands{
      {"solve", "Solve the Beltrami equation for generated coefficients"},
      {"decompose", "Canonical representation report"},
      {"motion", "Holomorphic motion and its symmetry report"},
      {"thermo", "Covering sums, variational checks and H(lambda)"},
      {"harnack", "Symmetric Harnack campaign"},
      {"sweep", "Dimension estimates against k, with bound curves"},
  };
  for (const auto& [name, help] : subcommands) {
    CLI::App* sub = cli.add_subcommand(name, help);
    sub->add_option("--config", config_path, "Experiment config file")->required()->check(CLI::ExistingFile);
    sub->add_option("--seed", seed, "Override experiment.seed");
    sub->add_option("--out", out_dir, "Override output.dir");
    sub->add_option("--grid", grid, "Override grid.n");
    sub->add_flag("--quiet", quiet, "Only print violations");
  }
  CLI11_PARSE(cli, argc, argv);
  const std::string name = cli.get_subcommands().front()->get_name();

  try {
    app::ExperimentConfig cfg = app::load_config(config_path);
    if (seed) cfg.seed = *seed;
    if (out_dir) cfg.out_dir = *out_dir;
    if (grid) cfg.grid.n = *grid;
    cfg.validate();

    const app::Outcome outcome = app::run(name, cfg, quiet ? nullptr : &std::cout);
    for (const auto& v : outcome.violations) std::cerr << "violation: " << v << '\n';
    if (!quiet) {
      for (const auto& a : outcome.artifacts) std::cout << "wrote " << a.string() << '\n';
    }
    return outcome.exit_code();
  } catch (const app::ConfigError& e) {
    std::cerr << config_path << ": " << e.what() << '\n';
    return 2;
  } catch (const quasidim::Error& e) {
    std::cerr << name << ": " << e.what() << '\n';
    return 2;
  }
}
