#include "quasidim/app/experiments.hpp"
#include "quasidim/canonical.hpp"
#include "quasidim/dimension.hpp"
#include "quasidim/error.hpp"
#include "quasidim/generators.hpp"
#include "quasidim/harnack.hpp"
#include "quasidim/solver.hpp"

#include <pybind11/complex.h>
#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>
#include <pybind11/stl/filesystem.h>

namespace py = pybind11;
using namespace quasidim;

namespace {

using ComplexArray = py::array_t<cplx, py::array::c_style | py::array::forcecast>;

ComplexArray to_array(const GridSpec& g, std::span<const cplx> v) {
  ComplexArray a({g.n, g.n});
  std::copy(v.begin(), v.end(), a.mutable_data());
  return a;
}

BeltramiField to_field(const GridSpec& g, const ComplexArray& a) {
  if (a.ndim() != 2 || a.shape(0) != static_cast<py::ssize_t>(g.n) || a.shape(1) != static_cast<py::ssize_t>(g.n)) {
    throw InvalidArgument("expected a complex array of shape (n, n) matching the grid");
  }
  return {g, std::vector<cplx>(a.data(), a.data() + a.size())};
}

py::dict report_dict(const BoundsReport& r) {
  py::dict d;
  d["k"] = r.k;
  d["norm_psi_bound"] = r.norm_psi_bound;
  d["norm_psi_achieved"] = r.norm_psi_achieved;
  d["upper_psi_achieved"] = r.upper_psi_achieved;
  d["norm_phi_achieved"] = r.norm_phi_achieved;
  d["anti_residual"] = r.anti_residual;
  d["curve_distance"] = r.curve_distance;
  d["grid_step"] = r.grid_step;
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Numerical quasiconformal maps, quasiline decomposition and dimension estimates.";

  auto error = py::register_exception<Error>(m, "Error", PyExc_RuntimeError);
  py::register_exception<InvalidArgument>(m, "InvalidArgument", error.ptr());
  py::register_exception<ConvergenceError>(m, "ConvergenceError", error.ptr());
  py::register_exception<ContractViolation>(m, "ContractViolation", error.ptr());
  py::register_exception<FormatError>(m, "FormatError", error.ptr());

  py::class_<GridSpec>(m, "Grid")
      .def(py::init([](std::size_t n, double half_width, cplx center) {
             GridSpec g;
             g.n = n;
             g.half_width = half_width;
             g.center = center;
             g.validate();
             return g;
           }),
           py::arg("n") = 256, py::arg("half_width") = 16.0, py::arg("center") = cplx(0.0, 0.0))
      .def_readonly("n", &GridSpec::n)
      .def_readonly("half_width", &GridSpec::half_width)
      .def_readonly("center", &GridSpec::center)
      .def_property_readonly("step", &GridSpec::step)
      .def("points", [](const GridSpec& g) {
        std::vector<cplx> p(g.size());
        for (std::size_t i = 0; i < p.size(); ++i) p[i] = g.point(i);
        return to_array(g, p);
      });

  m.def(
      "generate_mu",
      [](const GridSpec& g, double k, std::uint64_t seed, const std::string& kind, bool antisymmetrize,
         double support_radius, double axis_clearance) {
        GeneratorSpec spec;
        spec.kind = parse_generator_kind(kind);
        spec.k = k;
        spec.antisymmetrize = antisymmetrize;
        spec.support_radius = support_radius;
        spec.axis_clearance = axis_clearance;
        return to_array(g, generate_mu(g, spec, seed).values());
      },
      py::arg("grid"), py::arg("k"), py::arg("seed") = 1, py::arg("kind") = "random_smooth",
      py::arg("antisymmetrize") = false, py::arg("support_radius") = 4.0, py::arg("axis_clearance") = 0.0);

  m.def(
      "solve",
      [](const GridSpec& g, const ComplexArray& mu, bool normalized) {
        const BeltramiField f = to_field(g, mu);
        py::gil_scoped_release release;
        const QcMap map = normalized ? solve_normalized(f) : solve(f);
        py::gil_scoped_acquire acquire;
        return to_array(g, map.values());
      },
      py::arg("grid"), py::arg("mu"), py::arg("normalized") = true,
      "Images of the grid samples; normalized maps fix 0 and 1.");

  m.def(
      "beltrami_of_map",
      [](const GridSpec& g, const ComplexArray& values) {
        const QcMap map(g, std::vector<cplx>(values.data(), values.data() + values.size()),
                        Normalization::fix_0_1_inf, NAN);
        return to_array(g, beltrami_of_map(map).values());
      },
      py::arg("grid"), py::arg("values"));

  m.def(
      "decompose",
      [](const GridSpec& g, const ComplexArray& mu, double tol) {
        DecompositionOptions opts;
        opts.tol = tol;
        opts.enforce_bounds = false;
        const BeltramiField f = to_field(g, mu);
        py::gil_scoped_release release;
        const DecompositionResult d = decompose(f, opts);
        py::gil_scoped_acquire acquire;
        py::dict out = report_dict(d.report);
        out["mu_psi"] = to_array(g, d.mu_psi.values());
        out["mu_phi"] = to_array(g, d.mu_phi.values());
        return out;
      },
      py::arg("grid"), py::arg("mu"), py::arg("tol") = 1e-2);

  m.def(
      "box_dimension",
      [](const std::vector<cplx>& points, int coarsest, int finest) {
        return box_dimension(Curve{points, "python"}, coarsest, finest).value;
      },
      py::arg("points"), py::arg("coarsest") = 4, py::arg("finest") = 10);

  m.def(
      "dimension_bounds",
      [](double k) {
        const DimensionBounds b = bounds_table(k);
        return py::dict(py::arg("bound_1k") = b.bound_1k, py::arg("bound_37k2") = b.bound_37k2,
                        py::arg("bound_k2") = b.bound_k2);
      },
      py::arg("k"));

  m.def(
      "harnack_campaign",
      [](std::size_t densities, std::vector<double> radii, std::uint64_t seed) {
        CampaignOptions opts;
        opts.densities = densities;
        opts.radii = std::move(radii);
        opts.seed = seed;
        const CampaignSummary s = run_harnack_campaign(opts);
        return py::dict(py::arg("checks") = s.checks, py::arg("violations") = s.violations,
                        py::arg("schwarz_violations") = s.schwarz_violations,
                        py::arg("probe_failed_as_expected") = s.probe_failed_as_expected);
      },
      py::arg("densities") = 200, py::arg("radii") = std::vector<double>{0.3, 0.6, 0.9}, py::arg("seed") = 1);

  m.def(
      "run",
      [](const std::string& subcommand, const std::filesystem::path& config, const std::filesystem::path& out) {
        app::ExperimentConfig cfg = app::load_config(config);
        cfg.out_dir = out;
        const app::Outcome o = app::run(subcommand, cfg, nullptr);
        return py::make_tuple(o.exit_code(), o.violations);
      },
      py::arg("subcommand"), py::arg("config"), py::arg("out"),
      "Runs a subcommand like the command line tool; returns (exit code, violations).");
}
