#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <string>

#include "adiasearch/analysis.hpp"
#include "adiasearch/dynamics.hpp"
#include "adiasearch/error_models.hpp"
#include "adiasearch/errors.hpp"
#include "adiasearch/grover.hpp"
#include "adiasearch/schedules.hpp"
#include "adiasearch/spectral.hpp"

namespace py = pybind11;
using namespace adiasearch;

namespace {

// Column-oriented view of a trajectory: one numpy array per observable.
py::dict to_columns(const std::vector<TrajectoryPoint>& points) {
  const auto n = static_cast<py::ssize_t>(points.size());
  py::array_t<double> tau(n), s(n), p(n), eps(n), residual(n);
  auto t = tau.mutable_unchecked<1>();
  auto sv = s.mutable_unchecked<1>();
  auto pv = p.mutable_unchecked<1>();
  auto ev = eps.mutable_unchecked<1>();
  auto rv = residual.mutable_unchecked<1>();
  for (py::ssize_t i = 0; i < n; ++i) {
    const auto& pt = points[static_cast<std::size_t>(i)];
    t(i) = pt.tau;
    sv(i) = pt.s;
    pv(i) = pt.p;
    ev(i) = pt.eps_exact;
    rv(i) = pt.norm_residual;
  }
  py::dict out;
  out["tau"] = tau;
  out["s"] = s;
  out["p"] = p;
  out["eps_exact"] = eps;
  out["norm_residual"] = residual;
  return out;
}

IvpConfig make_config(double atol, double rtol) {
  IvpConfig cfg;
  cfg.atol = atol;
  cfg.rtol = rtol;
  return cfg;
}

}  // namespace

PYBIND11_MODULE(_adiasearch, m) {
  m.doc() = "Adiabatic unstructured search: spectra, schedules, exact dynamics and runtimes";

  auto numerical = py::register_exception<NumericalError>(m, "NumericalError", PyExc_RuntimeError);
  py::register_exception<NoCrossingError>(m, "NoCrossingError", numerical.ptr());
  py::register_exception<UnsupportedModelError>(m, "UnsupportedModelError", PyExc_ValueError);

  py::enum_<ScheduleKind>(m, "ScheduleKind")
      .value("Proposed", ScheduleKind::Proposed)
      .value("Original", ScheduleKind::Original)
      .value("Linear", ScheduleKind::Linear);

  py::enum_<ErrorModelKind>(m, "ErrorModelKind")
      .value("Constant", ErrorModelKind::Constant)
      .value("Sqrt", ErrorModelKind::Sqrt)
      .value("SineSqrt", ErrorModelKind::SineSqrt)
      .value("ScaledSqrt", ErrorModelKind::ScaledSqrt);

  py::class_<SearchInstance>(m, "SearchInstance")
      .def(py::init<int, double>(), py::arg("n"), py::arg("eps"))
      .def_property_readonly("n", &SearchInstance::qubits)
      .def_property_readonly("N", &SearchInstance::size)
      .def_property_readonly("eps", &SearchInstance::eps)
      .def("__repr__", [](const SearchInstance& s) {
        return "SearchInstance(n=" + std::to_string(s.qubits()) + ", eps=" + py::repr(py::float_(s.eps())).cast<std::string>() + ")";
      });

  py::class_<SpectralPoint>(m, "SpectralPoint")
      .def_readonly("s", &SpectralPoint::s)
      .def_readonly("gap", &SpectralPoint::gap)
      .def_readonly("c", &SpectralPoint::c)
      .def_readonly("alpha", &SpectralPoint::alpha)
      .def_readonly("beta", &SpectralPoint::beta)
      .def_readonly("e0", &SpectralPoint::e0)
      .def_readonly("e1", &SpectralPoint::e1);

  m.def("gap", &gap, py::arg("s"), py::arg("N"));
  m.def("spectral_point", &spectral_point, py::arg("s"), py::arg("N"));
  m.def("transition_matrix_element", &transition_matrix_element, py::arg("s"), py::arg("N"));
  m.def("ideal_marked_probability", &ideal_marked_probability, py::arg("s"), py::arg("N"));
  m.def("invert_ideal_probability", &invert_ideal_probability, py::arg("q"), py::arg("N"));

  m.def("duration", &duration, py::arg("kind"), py::arg("N"), py::arg("eps"));
  m.def("s_of_tau", &s_of_tau, py::arg("kind"), py::arg("tau"), py::arg("N"));
  m.def("tau_of_s", &tau_of_s, py::arg("kind"), py::arg("s"), py::arg("N"));
  m.def("ideal_q_of_tau", &ideal_q_of_tau, py::arg("kind"), py::arg("tau"), py::arg("N"));
  m.def("ideal_tau_of_q", &ideal_tau_of_q, py::arg("kind"), py::arg("q"), py::arg("N"));

  m.def("epsilon_of_tau", &epsilon_of_tau, py::arg("kind"), py::arg("tau"), py::arg("eps"));
  m.def("p_lower_bound_from_q", &p_lower_bound_from_q, py::arg("q"), py::arg("eps_val"));
  m.def("q_upper_bound_from_p", &q_upper_bound_from_p, py::arg("p"), py::arg("eps_val"));
  m.def("p_lower_bound_of_tau", &p_lower_bound_of_tau, py::arg("kind"), py::arg("tau"),
        py::arg("eps"), py::arg("N"));
  m.def("linear_loose_bound", &linear_loose_bound, py::arg("tau"), py::arg("eps"));
  m.def("time_to_probability", &time_to_probability, py::arg("p"), py::arg("N"), py::arg("eps"),
        py::arg("kind"));

  m.def(
      "simulate",
      [](ScheduleKind kind, const SearchInstance& instance, int grid_points, double atol,
         double rtol) {
        std::vector<TrajectoryPoint> points;
        {
          py::gil_scoped_release release;
          points = simulate(kind, instance, grid_points, make_config(atol, rtol));
        }
        return to_columns(points);
      },
      py::arg("kind"), py::arg("instance"), py::arg("grid_points") = kDefaultGridPoints,
      py::arg("atol") = 1e-12, py::arg("rtol") = 1e-12);

  m.def(
      "full_simulate",
      [](int n, std::uint64_t marked, ScheduleKind kind, double eps, int grid_points, double atol,
         double rtol) {
        std::vector<TrajectoryPoint> points;
        {
          py::gil_scoped_release release;
          points = full_simulate(n, marked, kind, eps, grid_points, make_config(atol, rtol));
        }
        return to_columns(points);
      },
      py::arg("n"), py::arg("marked"), py::arg("kind"), py::arg("eps"),
      py::arg("grid_points") = kDefaultGridPoints, py::arg("atol") = 1e-12, py::arg("rtol") = 1e-12);

  m.def("grover_q_of_steps", &grover_q_of_steps, py::arg("t"), py::arg("N"));
  m.def("grover_duration", &grover_duration, py::arg("N"));
  m.def("grover_q_of_tau", &grover_q_of_tau, py::arg("tau"), py::arg("N"));
  m.def("grover_tau_of_q", &grover_tau_of_q, py::arg("q"), py::arg("N"));
  m.def("matched_diabaticity", py::overload_cast<double, double>(&matched_diabaticity),
        py::arg("N"), py::arg("k") = 1.0);
  m.def("matched_diabaticity_two_domain",
        py::overload_cast<double, double, double>(&matched_diabaticity), py::arg("N_a"),
        py::arg("N_g"), py::arg("k") = 1.0);
  m.def("bounded_depth_probability", &bounded_depth_probability, py::arg("t_c"), py::arg("k"),
        py::arg("N"));

  py::class_<ProtocolParams>(m, "ProtocolParams")
      .def_readonly("p", &ProtocolParams::p)
      .def_readonly("T", &ProtocolParams::T)
      .def_readonly("t_f", &ProtocolParams::t_f)
      .def_property_readonly("tau_stop", &ProtocolParams::tau_stop);
  m.def("protocol_params", &protocol_params, py::arg("instance"), py::arg("p"));

  py::class_<ProtocolOutcome>(m, "ProtocolOutcome")
      .def_readonly("p_exact", &ProtocolOutcome::p_exact)
      .def_readonly("empirical_frequency", &ProtocolOutcome::empirical_frequency)
      .def_readonly("trials", &ProtocolOutcome::trials)
      .def_readonly("seed", &ProtocolOutcome::seed);
  m.def(
      "run_protocol",
      [](const ProtocolParams& params, std::int64_t trials, std::uint64_t seed) {
        py::gil_scoped_release release;
        return run_protocol(params, trials, seed);
      },
      py::arg("params"), py::arg("trials"), py::arg("seed"));

  py::class_<CrossingResult>(m, "CrossingResult")
      .def_readonly("eps_used", &CrossingResult::eps_used)
      .def_readonly("T", &CrossingResult::T)
      .def_readonly("tau_cross", &CrossingResult::tau_cross)
      .def_readonly("t_cross", &CrossingResult::t_cross)
      .def_readonly("lo", &CrossingResult::lo)
      .def_readonly("hi", &CrossingResult::hi)
      .def_readonly("residual", &CrossingResult::residual);
  m.def(
      "crossing_time",
      [](double N, double k, std::optional<double> eps, double window_end, int scan_points) {
        CrossingOptions options;
        options.eps = eps;
        options.window_end = window_end;
        options.scan_points = scan_points;
        py::gil_scoped_release release;
        return crossing_time(N, k, {}, options);
      },
      py::arg("N"), py::arg("k") = 1.0, py::arg("eps") = std::nullopt,
      py::arg("window_end") = 0.3, py::arg("scan_points") = 4001);

  m.def("required_runs", &required_runs, py::arg("p"), py::arg("alpha"));

  py::class_<CoherenceLimitedProbability>(m, "CoherenceLimitedProbability")
      .def_readonly("p", &CoherenceLimitedProbability::p)
      .def_readonly("advantage_threshold", &CoherenceLimitedProbability::advantage_threshold)
      .def_readonly("advantage", &CoherenceLimitedProbability::advantage);
  m.def("max_probability_for_coherence", &max_probability_for_coherence, py::arg("t_c"),
        py::arg("N"), py::arg("eps"));

  py::class_<ResourceBudget>(m, "ResourceBudget")
      .def(py::init([](std::optional<std::int64_t> S, double t_c, double alpha, double c) {
             return ResourceBudget{S, t_c, alpha, c};
           }),
           py::arg("S"), py::arg("t_c"), py::arg("alpha"), py::arg("c") = 0.0)
      .def_readwrite("S", &ResourceBudget::processors)
      .def_readwrite("t_c", &ResourceBudget::t_c)
      .def_readwrite("alpha", &ResourceBudget::alpha)
      .def_readwrite("c", &ResourceBudget::overhead);
  m.def("overall_runtime", &overall_runtime, py::arg("budget"), py::arg("instance"));
  m.def("grover_bounded_runtime", &grover_bounded_runtime, py::arg("budget"), py::arg("N"),
        py::arg("k") = 1.0);
}
