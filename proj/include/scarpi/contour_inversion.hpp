#pragma once

#include <complex>
#include <functional>
#include <string>
#include <vector>

namespace scarpi {

/// Default target accuracy (machine epsilon). The contour parameters are
/// balanced so that discretization, truncation and round-off all land near
/// this level; loosen per call for cheaper evaluations.
inline constexpr double kDefaultEps = 2.220446049250313e-16;

using LaplaceEval = std::function<std::complex<double>(std::complex<double>)>;

/// A Laplace transform F(s) to be inverted numerically. F must be defined on
/// the right half-plane and on the parabolic contours used by the quadrature,
/// which dip into the left half-plane but never touch the negative real axis.
/// Admissible singularities are confined to the origin and the negative-real
/// branch cut; F must also satisfy F(conj s) = conj F(s) so that the inverse
/// is real-valued.
struct LaplaceFunction {
  LaplaceEval eval;
  std::string singularity_note;
};

/// Parameters of the parabolic contour z(u) = mu*(i*u + 1)^2 for one time
/// point, together with the trapezoidal step and node count.
struct ContourPlan {
  double mu = 0.0;   // parabola scale, units 1/time
  double h = 0.0;    // quadrature step in the contour parameter u
  int n_nodes = 0;   // one-sided node count N; nodes are u_k = k*h, k = 0..N
  double eps = 0.0;  // target accuracy the plan was built for
};

/// Error-balanced contour parameters for time t. With L = -ln(eps):
///   N = ceil(4L/(3pi)),  h = 2pi/L + L/(2pi N^2),  mu = L^3/(4 t pi^2 N^2).
/// N and h depend only on eps; mu scales as 1/t.
/// Throws std::domain_error if t <= 0 or eps is outside (0,1).
ContourPlan optimal_params(double t, double eps = kDefaultEps);

/// Inverse Laplace transform at a single positive time.
double invert_at(const LaplaceFunction& f, double t, double eps = kDefaultEps);

/// Inverse Laplace transform on a grid of positive times. Every point gets
/// its own contour plan. Only imaginary parts of the integrand enter the
/// half-contour sum, so the output is real by construction.
std::vector<double> invert(const LaplaceFunction& f,
                           const std::vector<double>& t_grid,
                           double eps = kDefaultEps);

}  // namespace scarpi
