#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "darkstate/acceptance.hpp"
#include "darkstate/config.hpp"
#include "darkstate/diagnostics.hpp"
#include "darkstate/dressed.hpp"
#include "darkstate/dynamics.hpp"
#include "darkstate/ensemble.hpp"
#include "darkstate/field.hpp"
#include "darkstate/landau_zener.hpp"
#include "darkstate/scenarios.hpp"
#include "darkstate/trajectory.hpp"
#include "darkstate/units.hpp"

namespace py = pybind11;
using namespace darkstate;

namespace {

// Flattened sweep output for Python consumers.
struct PyRunResult {
  std::vector<std::string> columns;
  std::vector<std::vector<double>> rows;
  std::string csv_path;
  std::string gp_path;
  double runtime_s = 0;
  double max_norm_drift = 0;
};

PyRunResult run_scenario_py(const std::string& name,
                            const std::string& config_text,
                            const std::string& out_dir, unsigned jobs,
                            int points, double tol) {
  ParsedConfig cfg;
  if (!config_text.empty()) cfg = parse_config_text(config_text);
  RunOptions opt{out_dir, jobs, points, tol};
  SweepResult res = run_scenario(name, cfg, opt);
  PyRunResult out;
  out.columns = res.table.columns();
  out.rows.reserve(res.table.row_count());
  for (std::size_t i = 0; i < res.table.row_count(); ++i)
    out.rows.push_back(res.table.row(i));
  out.csv_path = res.csv_path;
  out.gp_path = res.gp_path;
  out.runtime_s = res.runtime_s;
  out.max_norm_drift = res.max_norm_drift;
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() =
      "Dark-state survival of an atom crossing standing-wave cavity nodes";

  py::enum_<Kind>(m, "Kind")
      .value("time", Kind::time)
      .value("length", Kind::length)
      .value("velocity", Kind::velocity)
      .value("frequency", Kind::frequency);

  py::class_<PhysicalParams>(m, "PhysicalParams")
      .def(py::init<>())
      .def_readwrite("g0", &PhysicalParams::g0)
      .def_readwrite("r0", &PhysicalParams::r0)
      .def_readwrite("alpha0", &PhysicalParams::alpha0)
      .def_readwrite("T0", &PhysicalParams::T0)
      .def_readwrite("tW", &PhysicalParams::tW)
      .def_readwrite("delta", &PhysicalParams::delta)
      .def_readwrite("lambda_si", &PhysicalParams::lambda_si)
      .def_readwrite("gamma_si", &PhysicalParams::gamma_si)
      .def_readwrite("mass_si", &PhysicalParams::mass_si)
      .def_readwrite("waist0", &PhysicalParams::waist0);

  m.def("default_params", &default_params);
  m.def("validate_params", [](const PhysicalParams& p) { validate(p); });
  m.def("to_natural", &to_natural, py::arg("si_value"), py::arg("kind"),
        py::arg("params"));
  m.def("to_si", &to_si, py::arg("natural_value"), py::arg("kind"),
        py::arg("params"));

  py::class_<PulseShape>(m, "PulseShape")
      .def(py::init<>())
      .def_readwrite("alpha0", &PulseShape::alpha0)
      .def_readwrite("T0", &PulseShape::T0)
      .def_readwrite("tW", &PulseShape::tW)
      .def_static("from_params", &PulseShape::from_params);

  m.def("alpha", &alpha, py::arg("t"), py::arg("pulse"));
  m.def("alpha_dot", &alpha_dot, py::arg("t"), py::arg("pulse"));
  m.def("chi_1d", &chi_1d, py::arg("z"));
  m.def(
      "chi",
      [](double z, double rho, double waist0) {
        return chi(Position{z, rho}, waist0);
      },
      py::arg("z"), py::arg("rho"), py::arg("waist0"));

  py::class_<DressedSpectrum>(m, "DressedSpectrum")
      .def_readonly("e0", &DressedSpectrum::e0)
      .def_readonly("e_plus", &DressedSpectrum::e_plus)
      .def_readonly("e_minus", &DressedSpectrum::e_minus)
      .def_readonly("epsilon", &DressedSpectrum::epsilon);

  m.def("dressed_energies", &dressed_energies, py::arg("chi"),
        py::arg("alpha"), py::arg("params"));
  m.def("dark_state", &dark_state, py::arg("g"), py::arg("omega"));
  m.def("bright_state", &bright_state, py::arg("g"), py::arg("omega"),
        py::arg("sign"));
  m.def("coupling_K", &coupling_K, py::arg("alpha"), py::arg("alpha_dot"),
        py::arg("r0"));
  m.def("adiabaticity_f", &adiabaticity_f, py::arg("t"), py::arg("pulse"),
        py::arg("g0"));
  m.def("lz_h", &lz_h, py::arg("t"), py::arg("pulse"));

  py::class_<Trajectory>(m, "Trajectory")
      .def_static("constant", &Trajectory::constant, py::arg("v"),
                  py::arg("z0"))
      .def_static("harmonic", &Trajectory::harmonic, py::arg("v"),
                  py::arg("z0"), py::arg("omega_t"), py::arg("direction") = 1)
      .def_static("line", &Trajectory::line, py::arg("v"), py::arg("z0"),
                  py::arg("theta"), py::arg("rho0") = 0.0)
      .def_readonly("v", &Trajectory::v)
      .def_readonly("z0", &Trajectory::z0);

  py::class_<CrossingEvent>(m, "CrossingEvent")
      .def_readonly("t_star", &CrossingEvent::t_star)
      .def_readonly("v_axial", &CrossingEvent::v_axial)
      .def_readonly("h_star", &CrossingEvent::h_star)
      .def_readonly("p_i", &CrossingEvent::p_i)
      .def_readonly("tangential", &CrossingEvent::tangential);

  m.def("find_node_crossings", &find_node_crossings, py::arg("traj"),
        py::arg("pulse"), py::arg("t0"), py::arg("t1"));

  py::class_<AmplitudeState>(m, "AmplitudeState")
      .def(py::init<>())
      .def_readwrite("c0", &AmplitudeState::c0)
      .def_readwrite("c_plus", &AmplitudeState::c_plus)
      .def_readwrite("c_minus", &AmplitudeState::c_minus)
      .def_readwrite("phi", &AmplitudeState::phi);

  py::class_<IntegrationReport>(m, "IntegrationReport")
      .def_readonly("final_state", &IntegrationReport::final_state)
      .def_readonly("p_dark", &IntegrationReport::p_dark)
      .def_readonly("max_norm_drift", &IntegrationReport::max_norm_drift)
      .def_readonly("steps", &IntegrationReport::steps)
      .def_readonly("rejected_steps", &IntegrationReport::rejected_steps);

  m.def("integrate", &integrate, py::arg("traj"), py::arg("pulse"),
        py::arg("params"), py::arg("t0"), py::arg("t1"),
        py::arg("rtol") = 1e-10, py::arg("atol") = 1e-12,
        py::arg("initial") = nullptr,
        py::call_guard<py::gil_scoped_release>());

  py::class_<LzPrediction>(m, "LzPrediction")
      .def_readonly("p_total", &LzPrediction::p_total)
      .def_readonly("per_node", &LzPrediction::per_node)
      .def_readonly("tangential_flag", &LzPrediction::tangential_flag)
      .def_readonly("overlapping_flag", &LzPrediction::overlapping_flag);

  m.def("survival_single", &survival_single, py::arg("h_star"),
        py::arg("v_axial"), py::arg("g0"));
  m.def("predict", &predict, py::arg("traj"), py::arg("pulse"),
        py::arg("params"), py::arg("t0"), py::arg("t1"));

  py::enum_<SurvivalMode>(m, "SurvivalMode")
      .value("analytic", SurvivalMode::analytic)
      .value("numeric", SurvivalMode::numeric);

  py::class_<VelocityDistribution>(m, "VelocityDistribution")
      .def(py::init<double, double>(), py::arg("v0"), py::arg("dv") = 1.2e-3)
      .def_readwrite("v0", &VelocityDistribution::v0)
      .def_readwrite("dv", &VelocityDistribution::dv);

  m.def("normalization_A", &normalization_A, py::arg("dist"));
  m.def(
      "ensemble_survival",
      [](const VelocityDistribution& dist, const PulseShape& pulse,
         const PhysicalParams& p, double z0, SurvivalMode mode,
         int gl_points) {
        py::gil_scoped_release unlock;
        return ensemble_survival(dist, pulse, p, z0, mode, nullptr,
                                 gl_points);
      },
      py::arg("dist"), py::arg("pulse"), py::arg("params"), py::arg("z0"),
      py::arg("mode") = SurvivalMode::analytic, py::arg("gl_points") = 64);

  py::class_<TrapFrequencies>(m, "TrapFrequencies")
      .def_readonly("omega_recoil", &TrapFrequencies::omega_recoil)
      .def_readonly("omega_z", &TrapFrequencies::omega_z)
      .def_readonly("omega_rho", &TrapFrequencies::omega_rho)
      .def_readonly("omega_recoil_si", &TrapFrequencies::omega_recoil_si)
      .def_readonly("omega_z_si", &TrapFrequencies::omega_z_si)
      .def_readonly("omega_rho_si", &TrapFrequencies::omega_rho_si);

  m.def("trap_frequencies", &trap_frequencies, py::arg("params"));
  m.def("linearization_error", &linearization_error, py::arg("bound"));
  m.def("small_term_S", &small_term_S, py::arg("x"), py::arg("v"),
        py::arg("params"));
  m.def("small_term_peak_x", &small_term_peak_x, py::arg("v"),
        py::arg("params"));

  py::class_<ThresholdReport>(m, "ThresholdReport")
      .def_readonly("pass_", &ThresholdReport::pass)
      .def_readonly("worst_exponent", &ThresholdReport::worst_exponent)
      .def_readonly("total_exponent", &ThresholdReport::total_exponent)
      .def_readonly("node_count", &ThresholdReport::node_count)
      .def_readonly("tangential", &ThresholdReport::tangential)
      .def_readonly("reaches_node", &ThresholdReport::reaches_node)
      .def_readonly("at_speed_threshold", &ThresholdReport::at_speed_threshold);

  m.def("adiabatic_threshold_check", &adiabatic_threshold_check,
        py::arg("traj"), py::arg("pulse"), py::arg("params"));
  m.attr("speed_threshold") = speed_threshold;

  py::class_<PyRunResult>(m, "RunResult")
      .def_readonly("columns", &PyRunResult::columns)
      .def_readonly("rows", &PyRunResult::rows)
      .def_readonly("csv_path", &PyRunResult::csv_path)
      .def_readonly("gp_path", &PyRunResult::gp_path)
      .def_readonly("runtime_s", &PyRunResult::runtime_s)
      .def_readonly("max_norm_drift", &PyRunResult::max_norm_drift);

  m.def("run_scenario", &run_scenario_py, py::arg("name"),
        py::arg("config_text") = "", py::arg("out_dir") = "",
        py::arg("jobs") = 1, py::arg("points") = 0, py::arg("tol") = 0.0,
        py::call_guard<py::gil_scoped_release>());
  m.def("scenario_names", [] {
    std::vector<std::string> names;
    for (const auto& s : scenario_registry()) names.push_back(s.name);
    return names;
  });
  m.def("emit_config",
        [](const PhysicalParams& p) { return emit_config(p); });
  m.def("parse_params", [](const std::string& text) {
    return parse_config_text(text).params;
  });
}
