#include "support.hpp"

#include "quasidim/app/experiments.hpp"
#include "quasidim/error.hpp"
#include "quasidim/generators.hpp"
#include "quasidim/grid_io.hpp"

#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

using namespace quasidim;
using namespace quasidim::app;

namespace {

std::filesystem::path scratch(const std::string& name) {
  const auto p = std::filesystem::temp_directory_path() / ("quasidim_test_" + name);
  std::filesystem::remove_all(p);
  return p;
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

void expect_error_at(const std::string& text, std::size_t line, std::size_t column) {
  try {
    parse_config(text);
    FAIL("no error for:\n" << text);
  } catch (const ConfigError& e) {
    CAPTURE(e.what());
    CHECK(e.line() == line);
    CHECK(e.column() == column);
  }
}

}  // namespace

TEST_CASE("config parsing") {
  const ExperimentConfig c = parse_config(R"(# comment
[grid]
n = 128
half_width = 8   ; trailing comment
center = 0

[generator]
kind = checkerboard
antisymmetrize = yes

[experiment]
seed = 42
seeds = 3
k = 0.1, 0.25
rho = 0.8
lambdas = 0, 0.1, -0.1, 0.1i, 0.05-0.05i

[harnack]
radii = 0.5

[output]
dir = some/where
)");
  CHECK(c.grid.n == 128);
  CHECK(c.grid.half_width == 8.0);
  CHECK(c.generator.kind == GeneratorKind::checkerboard);
  CHECK(c.generator.antisymmetrize);
  CHECK(c.seed == 42);
  CHECK(c.seeds == 3);
  CHECK(c.k_values == std::vector<double>{0.1, 0.25});
  CHECK(c.rho == 0.8);
  REQUIRE(c.lambdas.size() == 5);
  CHECK(c.lambdas[3] == cplx(0.0, 0.1));
  CHECK(c.lambdas[4] == cplx(0.05, -0.05));
  CHECK(c.harnack.radii == std::vector<double>{0.5});
  CHECK(c.out_dir == "some/where");

  const ExperimentConfig d = parse_config("");
  CHECK(d.grid.n == 256);
  CHECK(d.k_values == std::vector<double>{0.3});
}

TEST_CASE("config errors carry line and column") {
  expect_error_at("[grid]\nn = 64\nbogus = 1\n", 3, 1);
  expect_error_at("[grid]\n  n = sixty\n", 2, 7);
  expect_error_at("[grid\n", 1, 6);
  expect_error_at("[experiment]\nseed 4\n", 2, 1);
  expect_error_at("[experiment]\nk =\n", 2, 4);
  expect_error_at("[generator]\nkind = spiral\n", 2, 8);
  CHECK_THROWS_AS(parse_config("[experiment]\nk = 0.5, 1.0\n"), InvalidArgument);
  CHECK_THROWS_AS(parse_config("[grid]\nn = 100\n"), InvalidArgument);
  CHECK_THROWS_AS(parse_config("[experiment]\nrho = 0.5\nlambdas = 0.6i\n"), InvalidArgument);
  CHECK_THROWS_AS(load_config("/nonexistent/config.ini"), InvalidArgument);
}

TEST_CASE("complex literals") {
  CHECK(parse_complex("0.3") == cplx(0.3, 0.0));
  CHECK(parse_complex("-0.2i") == cplx(0.0, -0.2));
  CHECK(parse_complex("i") == cplx(0.0, 1.0));
  CHECK(parse_complex("0.1 + 0.2i") == cplx(0.1, 0.2));
  CHECK(parse_complex("1e-3-2e-2i") == cplx(1e-3, -2e-2));
  CHECK_THROWS_AS(parse_complex("abc"), InvalidArgument);
  CHECK_THROWS_AS(parse_complex(""), InvalidArgument);
}

TEST_CASE("generate_mu") {
  const GridSpec g = qt::grid(128, 16.0);
  for (const GeneratorKind kind : {GeneratorKind::bump, GeneratorKind::checkerboard, GeneratorKind::random_smooth}) {
    GeneratorSpec spec;
    spec.kind = kind;
    spec.k = 0.35;
    spec.antisymmetrize = true;
    CAPTURE(to_string(kind));
    const BeltramiField a = generate_mu(g, spec, 9);
    const BeltramiField b = generate_mu(g, spec, 9);
    CHECK(a.norm_bound() == doctest::Approx(0.35).epsilon(1e-14));
    CHECK(symmetry_residuals(a).anti <= 1e-15);
    CHECK(std::equal(a.values().begin(), a.values().end(), b.values().begin()));
    CHECK(parse_generator_kind(to_string(kind)) == kind);

    spec.k = 0.0;
    CHECK(generate_mu(g, spec, 9).norm_bound() == 0.0);
  }
  GeneratorSpec spec;
  const BeltramiField s1 = generate_mu(g, spec, 1), s2 = generate_mu(g, spec, 2);
  CHECK_FALSE(std::equal(s1.values().begin(), s1.values().end(), s2.values().begin()));
  CHECK_THROWS_AS(rescale_to_norm(g, std::vector<cplx>(g.size()), 0.2), InvalidArgument);
}

TEST_CASE("csv and numbers") {
  CHECK(format_number(0.1) == "0.1");
  CHECK(format_number(1.0 / 3.0) == "0.3333333333");
  CHECK(format_number(NAN) == "nan");
  CsvTable t({"a", "b"});
  t.add_row({"1", "x,y"});
  t.add_row({"say \"hi\"", ""});
  CHECK(t.str() == "a,b\r\n1,\"x,y\"\r\n\"say \"\"hi\"\"\",\r\n");
  CHECK_THROWS_AS(t.add_row({"1"}), InvalidArgument);
}

TEST_CASE("sweep with k = 0 reports dimension 1") {
  ExperimentConfig cfg = parse_config("[grid]\nn = 128\n[experiment]\nk = 0\nseeds = 2\n[thermo]\nqs_samples = 200\n");
  const SweepResult r = compute_sweep(cfg, nullptr);
  CHECK(r.violations.empty());
  REQUIRE(r.runs.size() == 2);
  for (const auto& run : r.runs) {
    CHECK(run.box.value == doctest::Approx(1.0).epsilon(0.02));
    CHECK(run.cover.value == doctest::Approx(1.0).epsilon(0.02));
  }
  const CsvTable t = sweep_table(r, cfg);
  CHECK(t.rows() == 2 * cfg.rho_values.size());
  CHECK(t.str().substr(0, t.str().find('\r')) == "k,rho,dim_box,dim_cover,bound_1k,bound_37k2,bound_k2,n_grid,seed");
}

TEST_CASE("sweep outputs are byte-identical across runs") {
  ExperimentConfig cfg =
      parse_config("[grid]\nn = 128\n[generator]\nantisymmetrize = true\n[experiment]\nk = 0.2, 0.4\nseeds = 1\n"
                   "[thermo]\nqs_samples = 300\n");
  const auto first = scratch("det_a");
  cfg.out_dir = first;
  CHECK(run_sweep(cfg, nullptr).exit_code() == 0);
  cfg.out_dir = scratch("det_b");
  CHECK(run_sweep(cfg, nullptr).exit_code() == 0);
  for (const char* f : {"sweep.csv", "sweep_estimates.csv", "sweep.svg"}) {
    CAPTURE(f);
    const std::string a = slurp(first / f);
    CHECK(!a.empty());
    CHECK(a == slurp(cfg.out_dir / f));
  }
  CHECK(slurp(cfg.out_dir / "sweep.svg").find("<svg") == 0);
}

TEST_CASE("decompose at k = 1/3") {
  ExperimentConfig cfg = parse_config(
      "[grid]\nn = 512\n[generator]\naxis_clearance = 0.5\n[experiment]\nk = 0.3333333333333333\n");
  cfg.out_dir = scratch("decompose");
  const Outcome o = run_decompose(cfg, nullptr);
  CHECK(o.exit_code() == 0);
  const std::string json = slurp(cfg.out_dir / "decompose.json");
  for (const char* key : {"\"k\"", "\"norm_psi_bound\"", "\"norm_psi_achieved\"", "\"norm_phi_achieved\"",
                          "\"anti_residual\"", "\"curve_distance\""}) {
    CHECK(json.find(key) != std::string::npos);
  }

  // without axis clearance the finite-difference coefficient of psi leaks
  // above the axis at this resolution; the run must fail loudly
  cfg.generator.axis_clearance = 0.0;
  cfg.out_dir = scratch("decompose_fail");
  const Outcome bad = run_decompose(cfg, nullptr);
  CHECK(bad.exit_code() == 1);
  CHECK_FALSE(bad.violations.empty());
}

TEST_CASE("harnack, motion, thermo and solve subcommands") {
  ExperimentConfig cfg = parse_config("[grid]\nn = 128\n[generator]\nantisymmetrize = true\n[experiment]\nk = 0.3\n");
  cfg.out_dir = scratch("subcommands");
  for (const char* sub : {"harnack", "motion", "thermo", "solve"}) {
    CAPTURE(sub);
    const Outcome o = run(sub, cfg, nullptr);
    CHECK(o.violations.empty());
    for (const auto& a : o.artifacts) CHECK(std::filesystem::exists(a));
  }
  CHECK(slurp(cfg.out_dir / "harnack.json").find("\"violations\": 0") != std::string::npos);
  const GridFile m = read_grid_file(cfg.out_dir / "motion_1.qdim");
  CHECK(m.grid == cfg.grid);
  CHECK(m.tag == std::uint8_t{0});
  CHECK_THROWS_AS(run("bogus", cfg, nullptr), InvalidArgument);
}
