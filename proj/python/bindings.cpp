#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "ndmap/errors.hpp"
#include "ndmap/experiments.hpp"
#include "ndmap/linalg.hpp"
#include "ndmap/nd_matrix.hpp"
#include "ndmap/solution_op.hpp"
#include "ndmap/spectrum.hpp"

namespace py = pybind11;
using namespace ndmap;

namespace {

SweepOptions make_options(double k, int J, double delta, double guard,
                          unsigned threads) {
  SweepOptions options;
  options.k = k;
  options.J = J;
  options.delta = delta;
  options.guard = guard;
  options.threads = threads;
  return options;
}

}  // namespace

PYBIND11_MODULE(_ndmap, m) {
  m.doc() = "Neumann-to-Dirichlet matrices for the Helmholtz equation on the unit square";

  py::register_exception<ResonanceError>(m, "ResonanceError", PyExc_ArithmeticError);
  py::register_exception<PreconditionError>(m, "PreconditionError", PyExc_ValueError);

  m.attr("DEFAULT_GUARD") = kDefaultGuard;
  m.attr("DEFAULT_DELTA") = kDefaultDelta;

  py::class_<ModeIndex>(m, "ModeIndex")
      .def(py::init<std::int64_t, std::int64_t>(), py::arg("l"), py::arg("m"))
      .def(py::init([](const py::tuple& t) {
        if (t.size() != 2) throw py::value_error("ModeIndex needs (l, m)");
        return ModeIndex{t[0].cast<std::int64_t>(), t[1].cast<std::int64_t>()};
      }))
      .def_readwrite("l", &ModeIndex::l)
      .def_readwrite("m", &ModeIndex::m)
      .def("__repr__", [](const ModeIndex& x) {
        return "ModeIndex(" + std::to_string(x.l) + ", " + std::to_string(x.m) + ")";
      });
  py::implicitly_convertible<py::tuple, ModeIndex>();

  py::class_<ProblemParams>(m, "ProblemParams")
      .def(py::init([](double k, double a, int J, double guard) {
             return ProblemParams{k, a, J, guard};
           }),
           py::arg("k") = 1.0, py::arg("a") = 0.0, py::arg("J") = 1,
           py::arg("guard") = kDefaultGuard)
      .def_readwrite("k", &ProblemParams::k)
      .def_readwrite("a", &ProblemParams::a)
      .def_readwrite("J", &ProblemParams::J)
      .def_readwrite("guard", &ProblemParams::guard)
      .def_property_readonly("size", &ProblemParams::size);

  py::enum_<AssemblyMethod>(m, "AssemblyMethod")
      .value("closed_form", AssemblyMethod::closed_form)
      .value("series_oracle", AssemblyMethod::series_oracle);
  py::enum_<SeriesKind>(m, "SeriesKind")
      .value("plain", SeriesKind::plain)
      .value("alternating", SeriesKind::alternating);

  py::class_<NdMatrix>(m, "NdMatrix")
      .def_property_readonly("entries", &NdMatrix::entries)
      .def_property_readonly("params", &NdMatrix::params)
      .def_property_readonly("method", &NdMatrix::method)
      .def_property_readonly("series_cutoff", &NdMatrix::series_cutoff)
      .def_property_readonly("method_name", &NdMatrix::method_name)
      .def_property_readonly("size", &NdMatrix::size);

  // spectrum
  m.def("neumann_eigenvalue", &neumann_eigenvalue, py::arg("mode"));
  m.def("is_resonant", &is_resonant, py::arg("a"), py::arg("k"),
        py::arg("guard") = kDefaultGuard);
  m.def("count_d", &count_d, py::arg("a"), py::arg("k"), py::arg("guard") = kDefaultGuard);
  m.def("multiplicity", &multiplicity, py::arg("n"));
  m.def("bound_delta", &bound_delta, py::arg("a"), py::arg("b"), py::arg("k"),
        py::arg("guard") = kDefaultGuard);
  m.def("construct_even_multiplicity", &construct_even_multiplicity, py::arg("N"));

  // nd_matrix
  m.def("normalizer", &normalizer, py::arg("j"));
  m.def("sum_formula", &sum_formula, py::arg("kind"), py::arg("c"),
        py::arg("guard") = kDefaultGuard);
  m.def("m0_entry", &m0_entry, py::arg("i"), py::arg("a"), py::arg("k"),
        py::arg("guard") = kDefaultGuard);
  m.def("m1_entry", &m1_entry, py::arg("i"), py::arg("j"), py::arg("a"), py::arg("k"),
        py::arg("guard") = kDefaultGuard);
  m.def("m2_entry", &m2_entry, py::arg("i"), py::arg("a"), py::arg("k"),
        py::arg("guard") = kDefaultGuard);
  m.def("m3_entry", &m3_entry, py::arg("i"), py::arg("j"), py::arg("a"), py::arg("k"),
        py::arg("guard") = kDefaultGuard);
  m.def("overlap_integral", &overlap_integral, py::arg("p"), py::arg("j"), py::arg("mode"));
  m.def("assemble", &assemble, py::arg("params"));
  m.def("assemble_series_oracle", &assemble_series_oracle, py::arg("params"),
        py::arg("series_cutoff"));

  // linalg
  m.def("sym_eigenvalues", &sym_eigenvalues, py::arg("matrix"));
  m.def("count_negative",
        [](const std::vector<double>& ev, double delta) { return count_negative(ev, delta); },
        py::arg("eigenvalues"), py::arg("delta") = kDefaultDelta);
  m.def("spectral_norm", &spectral_norm, py::arg("matrix"));
  m.def("truncation_error", &truncation_error, py::arg("params"));
  m.def("truncation_error_difference", &truncation_error_difference, py::arg("params"),
        py::arg("b"));

  // solution_op
  m.def("k_eigenvalue", &k_eigenvalue, py::arg("mode"));
  m.def("s_delta_coeff", &s_delta_coeff, py::arg("mode"), py::arg("a"), py::arg("b"),
        py::arg("k"), py::arg("guard") = kDefaultGuard);
  m.def("exact_negative_count", &exact_negative_count, py::arg("a"), py::arg("b"),
        py::arg("k"), py::arg("mode_cutoff"), py::arg("guard") = kDefaultGuard);

  // experiments
  py::class_<BoundReport>(m, "BoundReport")
      .def_readonly("a", &BoundReport::a)
      .def_readonly("b", &BoundReport::b)
      .def_readonly("k", &BoundReport::k)
      .def_readonly("J", &BoundReport::J)
      .def_readonly("delta", &BoundReport::delta)
      .def_readonly("measured_negative", &BoundReport::measured_negative)
      .def_readonly("theoretical_bound", &BoundReport::theoretical_bound)
      .def_readonly("min_eigenvalue", &BoundReport::min_eigenvalue)
      .def_readonly("max_eigenvalue", &BoundReport::max_eigenvalue);
  py::class_<SweepPoint>(m, "SweepPoint")
      .def_readonly("b", &SweepPoint::b)
      .def_readonly("report", &SweepPoint::report)
      .def_property_readonly("skipped", &SweepPoint::skipped);
  py::class_<TrajectoryPoint>(m, "TrajectoryPoint")
      .def_readonly("b", &TrajectoryPoint::b)
      .def_readonly("eigenvalues", &TrajectoryPoint::eigenvalues)
      .def_readonly("skipped", &TrajectoryPoint::skipped);
  py::class_<CrossingAttempt>(m, "CrossingAttempt")
      .def_readonly("eps", &CrossingAttempt::eps)
      .def_readonly("measured", &CrossingAttempt::measured);
  py::class_<CrossingReport>(m, "CrossingReport")
      .def_readonly("n", &CrossingReport::n)
      .def_readonly("center", &CrossingReport::center)
      .def_readonly("expected", &CrossingReport::expected)
      .def_readonly("measured", &CrossingReport::measured)
      .def_readonly("attempts", &CrossingReport::attempts)
      .def_property_readonly("agrees", &CrossingReport::agrees);

  m.def(
      "sweep",
      [](double a, const std::vector<double>& b_values, double k, int J, double delta,
         double guard, unsigned threads) {
        py::gil_scoped_release release;
        return sweep(a, b_values, make_options(k, J, delta, guard, threads));
      },
      py::arg("a"), py::arg("b_values"), py::arg("k") = 1.0, py::arg("J") = 100,
      py::arg("delta") = kDefaultDelta, py::arg("guard") = kDefaultGuard,
      py::arg("threads") = 0u);
  m.def(
      "trajectories",
      [](double a, const std::vector<double>& b_values, double k, int J, double guard,
         unsigned threads) {
        py::gil_scoped_release release;
        return trajectories(a, b_values, make_options(k, J, kDefaultDelta, guard, threads));
      },
      py::arg("a"), py::arg("b_values"), py::arg("k") = 1.0, py::arg("J") = 100,
      py::arg("guard") = kDefaultGuard, py::arg("threads") = 0u);
  m.def(
      "verify_crossing",
      [](std::uint64_t n, double eps, double k, int J, double delta, double guard) {
        py::gil_scoped_release release;
        return verify_crossing(n, eps, make_options(k, J, delta, guard, 0));
      },
      py::arg("n"), py::arg("eps") = 0.1, py::arg("k") = 1.0, py::arg("J") = 100,
      py::arg("delta") = kDefaultDelta, py::arg("guard") = kDefaultGuard);
  m.def("make_grid", &make_grid, py::arg("b_min"), py::arg("b_max"), py::arg("step"));
}
