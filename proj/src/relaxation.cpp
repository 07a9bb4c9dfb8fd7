#include "scarpi/relaxation.hpp"

#include <cmath>
#include <complex>
#include <iostream>
#include <numbers>
#include <stdexcept>

#include "scarpi/kernels.hpp"
#include "scarpi/special_functions.hpp"

namespace scarpi {

namespace {
constexpr double kPi = std::numbers::pi;
constexpr double kNearSingular = 1e-8;
}  // namespace

RelaxationProblem::RelaxationProblem(TransitionFunction transition_,
                                     double lambda_, double y0_)
    : transition(transition_), lambda(lambda_), y0(y0_) {
  if (lambda < 0.0) {
    throw std::domain_error(
        "RelaxationProblem: lambda < 0 (growth regime) is out of scope");
  }
}

TimeSeries solve_lt(const RelaxationProblem& problem,
                    const std::vector<double>& t_grid, double eps) {
  const KernelPair pair = make_kernel_pair(problem.transition);
  const double lambda = problem.lambda;
  const double y0 = problem.y0;
  bool near_singular = false;
  LaplaceFunction f{
      [&pair, lambda, y0, &near_singular](std::complex<double> s) {
        const std::complex<double> denom =
            1.0 + lambda * pair.psi_laplace(s);
        if (std::abs(denom) < kNearSingular) near_singular = true;
        return y0 / (s * denom);
      },
      "relaxation transform: branch point at the origin, cut on the negative "
      "real axis"};
  TimeSeries out;
  out.times = t_grid;
  out.values = invert(f, t_grid, eps);
  if (near_singular) {
    std::cerr << "solve_lt: warning: |1 + lambda*Psi(s)| < 1e-8 at a contour "
                 "node; transform is near-singular\n";
  }
  return out;
}

CQScheme cq_weights(const LaplaceEval& psi_laplace, double step_h, int count,
                    CQGenerator generator, double contour_radius) {
  if (!(step_h > 0.0)) throw std::domain_error("cq_weights: step_h must be > 0");
  if (count < 1) throw std::domain_error("cq_weights: count must be >= 1");
  const int m = count;
  const int k_nodes = 2 * (m + 1);
  double rho = contour_radius;
  if (rho == 0.0) {
    rho = std::pow(kDefaultEps, 1.0 / k_nodes);
  } else if (!(rho > 0.0 && rho < 1.0)) {
    throw std::domain_error("cq_weights: contour_radius must lie in (0,1)");
  }

  // Values of Psi(delta(zeta)/h) on the extraction circle.
  std::vector<std::complex<double>> values(k_nodes);
  for (int l = 0; l < k_nodes; ++l) {
    const std::complex<double> zeta = std::polar(rho, 2.0 * kPi * l / k_nodes);
    std::complex<double> dz;
    if (generator == CQGenerator::BDF1) {
      dz = 1.0 - zeta;
    } else {
      dz = 1.5 - 2.0 * zeta + 0.5 * zeta * zeta;
    }
    values[l] = psi_laplace(dz / step_h);
    if (!std::isfinite(values[l].real()) || !std::isfinite(values[l].imag())) {
      throw std::runtime_error(
          "cq_weights: non-finite transform value on the extraction circle "
          "at node l=" + std::to_string(l));
    }
  }

  // omega_n = rho^{-n}/K * sum_l values_l e^{-2 pi i n l / K}; the grid is
  // conjugate-symmetric so the imaginary parts cancel.
  std::vector<std::complex<double>> twiddle(k_nodes);
  for (int j = 0; j < k_nodes; ++j) {
    twiddle[j] = std::polar(1.0, -2.0 * kPi * j / k_nodes);
  }
  CQScheme scheme;
  scheme.step_h = step_h;
  scheme.generator = generator;
  scheme.contour_radius = rho;
  scheme.weights.resize(m + 1);
  for (int n = 0; n <= m; ++n) {
    std::complex<double> acc = 0.0;
    for (int l = 0; l < k_nodes; ++l) {
      acc += values[l] * twiddle[(static_cast<long long>(n) * l) % k_nodes];
    }
    scheme.weights[n] = acc.real() * std::pow(rho, -n) / k_nodes;
  }
  return scheme;
}

TimeSeries solve_cq(const RelaxationProblem& problem, double step_h,
                    int n_steps, CQGenerator generator) {
  if (n_steps < 1) throw std::domain_error("solve_cq: n_steps must be >= 1");
  const KernelPair pair = make_kernel_pair(problem.transition);
  const CQScheme scheme = cq_weights(
      [&pair](std::complex<double> s) { return pair.psi_laplace(s); }, step_h,
      n_steps, generator);
  const std::vector<double>& w = scheme.weights;
  const double lambda = problem.lambda;

  const double denom = 1.0 + lambda * w[0];
  if (std::abs(denom) < 1e-12) {
    throw std::runtime_error("solve_cq: singular step, |1 + lambda*omega_0| "
                             "< 1e-12");
  }

  TimeSeries out;
  out.times.resize(n_steps + 1);
  out.values.resize(n_steps + 1);
  out.times[0] = 0.0;
  out.values[0] = problem.y0;
  for (int n = 1; n <= n_steps; ++n) {
    double conv = 0.0;
    for (int j = 0; j < n; ++j) conv += w[n - j] * out.values[j];
    out.times[n] = n * step_h;
    out.values[n] = (problem.y0 - lambda * conv) / denom;
  }
  return out;
}

TimeSeries reference_constant_solution(double alpha, double lambda, double y0,
                                       const std::vector<double>& t_grid) {
  if (!(alpha > 0.0 && alpha <= 1.0)) {
    throw std::domain_error(
        "reference_constant_solution: alpha must lie in (0,1]");
  }
  TimeSeries out;
  out.times = t_grid;
  out.values.reserve(t_grid.size());
  for (double t : t_grid) {
    out.values.push_back(y0 * mittag_leffler_at(alpha, lambda, t));
  }
  return out;
}

}  // namespace scarpi
