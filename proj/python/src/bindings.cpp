#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "qlm/commands.hpp"
#include "qlm/criteria.hpp"
#include "qlm/errors.hpp"
#include "qlm/horizons.hpp"
#include "qlm/imcf_hulls.hpp"
#include "qlm/profiles.hpp"
#include "qlm/quasimass.hpp"

namespace py = pybind11;
using namespace qlm;

namespace {

AlphaParams make_alpha(double C, std::optional<double> iota, const std::string& convention) {
  AlphaParams p;
  p.C = C;
  p.iota = iota;
  if (convention == "bound") p.curvature.convention = CurvatureConvention::bound;
  else if (convention != "sqrt_bound") throw InvalidParams("unknown k convention " + convention);
  return p;
}

}  // namespace

PYBIND11_MODULE(_qlmass, mod) {
  mod.doc() = "Quasi-local masses and horizon criteria for radial metrics";
  mod.attr("__version__") = tool_version();

  auto base = py::register_exception<Error>(mod, "Error", PyExc_RuntimeError);
  py::register_exception<OutOfDomain>(mod, "OutOfDomain", base.ptr());
  py::register_exception<InvalidParams>(mod, "InvalidParams", base.ptr());
  py::register_exception<InvalidProfile>(mod, "InvalidProfile", base.ptr());
  py::register_exception<NonMonotoneBridge>(mod, "NonMonotoneBridge", base.ptr());
  py::register_exception<NotAsymptoticallyFlat>(mod, "NotAsymptoticallyFlat", base.ptr());
  py::register_exception<NoHorizon>(mod, "NoHorizon", base.ptr());
  py::register_exception<FlowObstruction>(mod, "FlowObstruction", base.ptr());
  py::register_exception<BoundaryNotMeanConvex>(mod, "BoundaryNotMeanConvex", base.ptr());
  py::register_exception<ParseError>(mod, "ParseError", base.ptr());
  py::register_exception<ValidationError>(mod, "ValidationError", base.ptr());

  py::class_<ProfileValue>(mod, "ProfileValue")
      .def_readonly("u", &ProfileValue::u)
      .def_readonly("du", &ProfileValue::du)
      .def_readonly("d2u", &ProfileValue::d2u);

  py::class_<RadialMetric>(mod, "RadialMetric")
      .def("eval", &RadialMetric::eval, py::arg("r"))
      .def("contains", &RadialMetric::contains, py::arg("r"))
      .def("search_interval", &RadialMetric::search_interval)
      .def_property_readonly("description", &RadialMetric::description)
      .def("__repr__", [](const RadialMetric& g) { return "<RadialMetric " + g.description() + ">"; });

  mod.def("build_flat", &build_flat);
  mod.def("build_schwarzschild", &build_schwarzschild, py::arg("m"));
  mod.def(
      "build_g1",
      [](double m, const std::string& bridge) {
        return build_g1({m, bridge_kind_from_string(bridge.c_str())});
      },
      py::arg("m"), py::arg("bridge") = "quintic");
  mod.def(
      "build_g2",
      [](double m, double rho0, double rho1, const std::string& bridge) {
        return build_g2({m, rho0, rho1, bridge_kind_from_string(bridge.c_str())});
      },
      py::arg("m"), py::arg("rho0"), py::arg("rho1"), py::arg("bridge") = "quintic");

  py::class_<SphereReport>(mod, "SphereReport")
      .def_readonly("r", &SphereReport::r)
      .def_readonly("area", &SphereReport::area)
      .def_readonly("areal_radius", &SphereReport::areal_radius)
      .def_readonly("mean_curvature", &SphereReport::mean_curvature)
      .def_readonly("scalar_curvature", &SphereReport::scalar_curvature);
  mod.def("sphere_geometry", &sphere_geometry, py::arg("metric"), py::arg("r"));
  mod.def("mean_curvature", &mean_curvature, py::arg("metric"), py::arg("r"));
  mod.def("radial_distance", &radial_distance, py::arg("metric"), py::arg("r1"),
          py::arg("r2"), py::arg("abs_tol") = 1e-10);

  mod.def("hawking_mass", &hawking_mass, py::arg("metric"), py::arg("r"));
  mod.def("brown_york_mass", &brown_york_radial, py::arg("metric"), py::arg("r"));
  mod.def("adm_mass", [](const RadialMetric& g) { return adm_mass(g); }, py::arg("metric"));
  mod.def("torus_hawking_mass", &torus_hawking_mass, py::arg("r"), py::arg("l"));

  py::class_<HorizonRecord>(mod, "HorizonRecord")
      .def_readonly("r", &HorizonRecord::r)
      .def_readonly("areal_radius", &HorizonRecord::areal_radius)
      .def_readonly("area", &HorizonRecord::area)
      .def_property_readonly("kind", [](const HorizonRecord& h) { return to_string(h.kind); })
      .def_readonly("outermost", &HorizonRecord::outermost)
      .def_readonly("outer_minimizing", &HorizonRecord::outer_minimizing);
  mod.def("find_horizons", [](const RadialMetric& g) { return find_horizons(g).horizons; },
          py::arg("metric"));
  mod.def("penrose_check", &penrose_check, py::arg("metric"));

  py::class_<ImcfSample>(mod, "ImcfSample")
      .def_readonly("t", &ImcfSample::t)
      .def_readonly("r", &ImcfSample::r)
      .def_readonly("areal_radius", &ImcfSample::areal_radius)
      .def_readonly("area", &ImcfSample::area)
      .def_readonly("hawking", &ImcfSample::hawking);
  mod.def("imcf_trace",
          [](const RadialMetric& g, double a, double b, int n) { return imcf_trace(g, a, b, n).samples; },
          py::arg("metric"), py::arg("r_start"), py::arg("r_end"), py::arg("n") = 65);
  mod.def("geroch_report",
          [](const std::vector<ImcfSample>& s) { return geroch_report(ImcfTrace{s}); },
          py::arg("samples"));

  mod.def("radial_hull_check", &radial_hull_check, py::arg("metric"), py::arg("s"), py::arg("r2"));
  mod.def(
      "alpha_coefficient",
      [](const RadialMetric& g, double r1, double r2, double C, std::optional<double> iota,
         const std::string& conv) {
        return alpha_coefficient(g, r1, r2, make_alpha(C, iota, conv)).alpha;
      },
      py::arg("metric"), py::arg("r1"), py::arg("r2"), py::arg("C") = 1.0,
      py::arg("iota") = py::none(), py::arg("k_convention") = "sqrt_bound");
  mod.def("m_region", [](const RadialMetric& g, double r1, double r2) { return m_region(g, r1, r2).value; },
          py::arg("metric"), py::arg("r1"), py::arg("r2"));
  mod.def(
      "m_omega",
      [](const RadialMetric& g, double r_out, double C, std::optional<double> iota,
         const std::string& conv, int pairs) {
        MOmegaOptions opt;
        opt.pairs = pairs;
        const auto res = m_omega(g, r_out, make_alpha(C, iota, conv), opt);
        py::dict d;
        d["value"] = res.value;
        d["r1"] = res.best.r1;
        d["r2"] = res.best.r2;
        d["alpha"] = res.best.alpha;
        d["m_region"] = res.best.region_mass;
        d["pairs_evaluated"] = res.pairs_evaluated;
        return d;
      },
      py::arg("metric"), py::arg("r_out"), py::arg("C") = 1.0, py::arg("iota") = py::none(),
      py::arg("k_convention") = "sqrt_bound", py::arg("pairs") = 64);
  mod.def(
      "evaluate_criteria",
      [](const RadialMetric& g, double r_out, bool require_mean_convex, double C,
         std::optional<double> iota) {
        CriteriaOptions opt;
        opt.require_mean_convex = require_mean_convex;
        const auto rep = evaluate_criteria(g, r_out, make_alpha(C, iota, "sqrt_bound"), opt);
        py::dict d;
        d["m_by"] = rep.m_by_boundary;
        d["m_omega"] = rep.m_omega_est;
        d["two_R"] = rep.two_R;
        d["two_diam"] = rep.two_diam;
        d["boundary_mean_convex"] = rep.boundary_mean_convex;
        py::dict verdicts;
        for (const auto& v : rep.verdicts)
          verdicts[py::str(v.name)] = py::make_tuple(v.satisfied, v.margin);
        d["verdicts"] = verdicts;
        return d;
      },
      py::arg("metric"), py::arg("r_out"), py::arg("require_mean_convex") = true,
      py::arg("C") = 1.0, py::arg("iota") = py::none());

  mod.def(
      "run",
      [](const std::string& config_text, const std::string& command, const std::string& format) {
        const auto cfg = parse_config(config_text);
        const auto doc = run_command(cfg, command_from_string(command));
        return render(doc, cfg, format == "json" ? Format::json : Format::csv);
      },
      py::arg("config"), py::arg("command"), py::arg("format") = "csv",
      "Run a CLI command on a JSON config string and return the rendered output.");
}
