#pragma once

#include <vector>

#include "scarpi/contour_inversion.hpp"
#include "scarpi/transitions.hpp"

namespace scarpi {

/// The variable-order relaxation problem D y = -lambda y, y(0) = y0, with
/// the derivative generated by the given transition. lambda < 0 (growth) is
/// rejected: the transform of the solution develops singularities the
/// inversion contour cannot handle.
struct RelaxationProblem {
  RelaxationProblem(TransitionFunction transition, double lambda, double y0);

  TransitionFunction transition;
  double lambda;
  double y0;
};

struct TimeSeries {
  std::vector<double> times;   // strictly increasing, >= 0
  std::vector<double> values;  // same length
};

enum class CQGenerator { BDF1, BDF2 };

/// Convolution-quadrature weights omega_0..omega_M for a kernel known
/// through its Laplace transform.
struct CQScheme {
  double step_h = 0.0;
  std::vector<double> weights;  // M + 1 entries
  CQGenerator generator = CQGenerator::BDF1;
  double contour_radius = 0.0;  // radius used for coefficient extraction
};

/// Solution by inversion of Y(s) = y0 / (s (1 + lambda Psi(s))) on a grid of
/// positive times. Warns on stderr if 1 + lambda Psi comes within 1e-8 of
/// zero at a contour node.
TimeSeries solve_lt(const RelaxationProblem& problem,
                    const std::vector<double>& t_grid,
                    double eps = kDefaultEps);

/// Weights are the power-series coefficients of Psi(delta(zeta)/h) at
/// zeta = 0, extracted by trapezoidal discretization of the Cauchy integral
/// on |zeta| = contour_radius with 2(M+1) nodes. delta(zeta) = 1 - zeta for
/// BDF1, 3/2 - 2 zeta + zeta^2/2 for BDF2. Pass contour_radius = 0 to use
/// the accuracy/round-off balance rho = eps_machine^{1/(2(M+1))}.
CQScheme cq_weights(const LaplaceEval& psi_laplace, double step_h, int count,
                    CQGenerator generator = CQGenerator::BDF1,
                    double contour_radius = 0.0);

/// Marching solution of the integral form
///   y(t) = y0 - lambda int_0^t psi(t - tau) y(tau) dtau
/// with convolution quadrature:
///   y_n = (y0 - lambda sum_{j<n} omega_{n-j} y_j) / (1 + lambda omega_0).
/// The returned series starts at t = 0 with value y0. The scheme uses the
/// pure convolution part with no starting correction, so the first steps
/// carry an O(h^{alpha(0+)}) error.
TimeSeries solve_cq(const RelaxationProblem& problem, double step_h,
                    int n_steps, CQGenerator generator = CQGenerator::BDF1);

/// Constant-order reference y0 E_alpha(-lambda t^alpha), alpha in (0,1].
TimeSeries reference_constant_solution(double alpha, double lambda, double y0,
                                       const std::vector<double>& t_grid);

}  // namespace scarpi
