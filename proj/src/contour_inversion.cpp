#include "scarpi/contour_inversion.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace scarpi {

namespace {
constexpr double kPi = std::numbers::pi;
}

ContourPlan optimal_params(double t, double eps) {
  if (!(t > 0.0)) {
    throw std::domain_error(
        "optimal_params: contour parameters undefined at t <= 0");
  }
  if (!(eps > 0.0 && eps < 1.0)) {
    throw std::domain_error("optimal_params: eps must lie in (0,1)");
  }
  const double big_l = -std::log(eps);
  const int n = static_cast<int>(std::ceil(4.0 * big_l / (3.0 * kPi)));
  ContourPlan plan;
  plan.n_nodes = n;
  plan.h = 2.0 * kPi / big_l + big_l / (2.0 * kPi * n * n);
  plan.mu = big_l * big_l * big_l / (4.0 * t * kPi * kPi * n * n);
  plan.eps = eps;
  return plan;
}

double invert_at(const LaplaceFunction& f, double t, double eps) {
  const ContourPlan plan = optimal_params(t, eps);
  const double mu = plan.mu;
  const double h = plan.h;

  // Trapezoidal rule on the half contour z(u) = mu (iu + 1)^2, u = kh >= 0,
  // z'(u) = 2 mu (i - u). The k = 0 node carries half weight; the u < 0 half
  // is the mirror image, so only imaginary parts survive.
  double acc = 0.0;
  for (int k = 0; k <= plan.n_nodes; ++k) {
    const double u = k * h;
    const std::complex<double> z(mu * (1.0 - u * u), 2.0 * mu * u);
    const std::complex<double> dz(-2.0 * mu * u, 2.0 * mu);
    const std::complex<double> g = std::exp(z * t) * f.eval(z) * dz;
    if (!std::isfinite(g.real()) || !std::isfinite(g.imag())) {
      throw std::runtime_error(
          "invert: non-finite transform value at node k=" + std::to_string(k) +
          " (t=" + std::to_string(t) + ")" +
          (f.singularity_note.empty() ? "" : "; " + f.singularity_note));
    }
    acc += (k == 0) ? 0.5 * g.imag() : g.imag();
  }
  return acc * h / kPi;
}

std::vector<double> invert(const LaplaceFunction& f,
                           const std::vector<double>& t_grid, double eps) {
  std::vector<double> out;
  out.reserve(t_grid.size());
  for (double t : t_grid) out.push_back(invert_at(f, t, eps));
  return out;
}

}  // namespace scarpi
