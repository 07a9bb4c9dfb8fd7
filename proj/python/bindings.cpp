#include <pybind11/complex.h>
#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "scarpi/contour_inversion.hpp"
#include "scarpi/kernels.hpp"
#include "scarpi/relaxation.hpp"
#include "scarpi/sonine.hpp"
#include "scarpi/special_functions.hpp"
#include "scarpi/transitions.hpp"

namespace py = pybind11;
using namespace scarpi;

namespace {

LaplaceFunction wrap_transform(const LaplaceEval& eval) {
  return LaplaceFunction{eval, "user-supplied transform"};
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "variable-order fractional calculus via Laplace-domain kernels";

  py::class_<ContourPlan>(m, "ContourPlan")
      .def_readonly("mu", &ContourPlan::mu)
      .def_readonly("h", &ContourPlan::h)
      .def_readonly("n_nodes", &ContourPlan::n_nodes)
      .def_readonly("eps", &ContourPlan::eps)
      .def("__repr__", [](const ContourPlan& p) {
        return "ContourPlan(mu=" + std::to_string(p.mu) +
               ", h=" + std::to_string(p.h) +
               ", n_nodes=" + std::to_string(p.n_nodes) + ")";
      });

  m.def("optimal_params", &optimal_params, py::arg("t"),
        py::arg("eps") = kDefaultEps,
        "Error-balanced parabolic-contour parameters for time t.");

  m.def(
      "invert",
      [](const LaplaceEval& transform, const std::vector<double>& t_grid,
         double eps) { return invert(wrap_transform(transform), t_grid, eps); },
      py::arg("transform"), py::arg("t_grid"), py::arg("eps") = kDefaultEps,
      "Numerical inverse Laplace transform on a grid of positive times.");

  m.def(
      "invert_at",
      [](const LaplaceEval& transform, double t, double eps) {
        return invert_at(wrap_transform(transform), t, eps);
      },
      py::arg("transform"), py::arg("t"), py::arg("eps") = kDefaultEps);

  py::enum_<TransitionKind>(m, "TransitionKind")
      .value("Constant", TransitionKind::Constant)
      .value("Exponential", TransitionKind::Exponential)
      .value("MittagLeffler", TransitionKind::MittagLeffler)
      .value("Erf", TransitionKind::Erf);

  py::class_<TransitionFunction>(m, "TransitionFunction")
      .def("__call__", &TransitionFunction::value, py::arg("t"))
      .def("laplace", &TransitionFunction::laplace, py::arg("s"))
      .def_property_readonly("kind", &TransitionFunction::kind)
      .def_property_readonly("alpha1", &TransitionFunction::alpha1)
      .def_property_readonly("alpha2", &TransitionFunction::alpha2)
      .def_property_readonly("rate", &TransitionFunction::rate)
      .def_property_readonly("ml_exponent", &TransitionFunction::ml_exponent)
      .def_property_readonly("alpha_initial",
                             &TransitionFunction::alpha_initial)
      .def_property_readonly("alpha_final", &TransitionFunction::alpha_final);

  m.def("make_constant", &make_constant, py::arg("alpha"));
  m.def("make_exponential", &make_exponential, py::arg("a1"), py::arg("a2"),
        py::arg("c"));
  m.def("make_mittag_leffler", &make_mittag_leffler, py::arg("a1"),
        py::arg("a2"), py::arg("c"), py::arg("beta"));
  m.def("make_erf", &make_erf, py::arg("a1"), py::arg("a2"), py::arg("c"));

  py::class_<KernelPair>(m, "KernelPair")
      .def("phi_laplace", &KernelPair::phi_laplace, py::arg("s"))
      .def("psi_laplace", &KernelPair::psi_laplace, py::arg("s"))
      .def_property_readonly("order_index", &KernelPair::order_index)
      .def_property_readonly("transition", &KernelPair::transition);

  m.def("make_kernel_pair", &make_kernel_pair, py::arg("transition"));
  m.def("higher_order_pair", &higher_order_pair, py::arg("transition"),
        py::arg("n"));
  m.def("complex_power", &complex_power, py::arg("s"), py::arg("g"));

  m.def("phi_kernel", &phi_kernel, py::arg("pair"), py::arg("t_grid"),
        py::arg("eps") = kDefaultEps);
  m.def("psi_kernel", &psi_kernel, py::arg("pair"), py::arg("t_grid"),
        py::arg("eps") = kDefaultEps);
  m.def("phi_j_kernel", &phi_j_kernel, py::arg("pair"), py::arg("j"),
        py::arg("t_grid"), py::arg("eps") = kDefaultEps);
  m.def("spectral_density", &spectral_density, py::arg("pair"),
        py::arg("r_grid"));

  py::class_<KochubeiReport>(m, "KochubeiReport")
      .def_readonly("a1_finite", &KochubeiReport::a1_finite)
      .def_readonly("a2_nonnegative", &KochubeiReport::a2_nonnegative)
      .def_readonly("a3_decay_at_inf", &KochubeiReport::a3_decay_at_inf)
      .def_readonly("a4_blowup_at_zero", &KochubeiReport::a4_blowup_at_zero)
      .def_readonly("min_density", &KochubeiReport::min_density)
      .def_readonly("argmin_r", &KochubeiReport::argmin_r)
      .def("all", &KochubeiReport::all);

  m.def("kochubei_check", &kochubei_check, py::arg("pair"), py::arg("r_grid"),
        py::arg("sigma_grid"), py::arg("density_tolerance") = 1e-8);

  py::class_<ConvolutionCheckReport>(m, "ConvolutionCheckReport")
      .def_readonly("t_checkpoints", &ConvolutionCheckReport::t_checkpoints)
      .def_readonly("deviations", &ConvolutionCheckReport::deviations)
      .def_readonly("max_deviation", &ConvolutionCheckReport::max_deviation)
      .def_readonly("mesh_size", &ConvolutionCheckReport::mesh_size)
      .def_readonly("grading_exponent",
                    &ConvolutionCheckReport::grading_exponent);

  m.def("sonine_convolve", &sonine_convolve, py::arg("pair"), py::arg("t"),
        py::arg("mesh"), py::arg("grading"), py::arg("eps") = kDefaultEps);
  m.def("verify_pair", &verify_pair, py::arg("pair"), py::arg("t_checkpoints"),
        py::arg("mesh"), py::arg("grading"), py::arg("eps") = kDefaultEps);

  m.def("gamma_fn", &gamma_fn, py::arg("x"));
  m.def("mittag_leffler", &mittag_leffler, py::arg("beta"), py::arg("x"));
  m.def("mittag_leffler_at", &mittag_leffler_at, py::arg("beta"), py::arg("c"),
        py::arg("t"));

  py::class_<RelaxationProblem>(m, "RelaxationProblem")
      .def(py::init<TransitionFunction, double, double>(),
           py::arg("transition"), py::arg("lambda_"), py::arg("y0"))
      .def_readonly("lambda_", &RelaxationProblem::lambda)
      .def_readonly("y0", &RelaxationProblem::y0);

  py::class_<TimeSeries>(m, "TimeSeries")
      .def_readonly("times", &TimeSeries::times)
      .def_readonly("values", &TimeSeries::values);

  py::enum_<CQGenerator>(m, "CQGenerator")
      .value("BDF1", CQGenerator::BDF1)
      .value("BDF2", CQGenerator::BDF2);

  py::class_<CQScheme>(m, "CQScheme")
      .def_readonly("step_h", &CQScheme::step_h)
      .def_readonly("weights", &CQScheme::weights)
      .def_readonly("generator", &CQScheme::generator)
      .def_readonly("contour_radius", &CQScheme::contour_radius);

  m.def("solve_lt", &solve_lt, py::arg("problem"), py::arg("t_grid"),
        py::arg("eps") = kDefaultEps);
  m.def("cq_weights", &cq_weights, py::arg("psi_laplace"), py::arg("step_h"),
        py::arg("count"), py::arg("generator") = CQGenerator::BDF1,
        py::arg("contour_radius") = 0.0);
  m.def("solve_cq", &solve_cq, py::arg("problem"), py::arg("step_h"),
        py::arg("n_steps"), py::arg("generator") = CQGenerator::BDF1);
  m.def("reference_constant_solution", &reference_constant_solution,
        py::arg("alpha"), py::arg("lambda_"), py::arg("y0"),
        py::arg("t_grid"));
}
