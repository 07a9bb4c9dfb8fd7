#include "scarpi/sonine.hpp"

#include <cmath>
#include <stdexcept>

namespace scarpi {

double sonine_convolve(const KernelPair& pair, double t, int mesh,
                       double grading, double eps) {
  if (!(t > 0.0)) throw std::domain_error("sonine_convolve: t must be > 0");
  if (mesh < 64) throw std::domain_error("sonine_convolve: mesh must be >= 64");
  if (!(grading >= 1.0)) {
    throw std::domain_error("sonine_convolve: grading must be >= 1");
  }

  // Graded cells on [0, t/2]; the other half is the mirror image. Kernel
  // values are taken at cell midpoints only, never at the singular endpoints
  // tau = 0 and tau = t.
  const int m = mesh;
  std::vector<double> tau(m + 1);
  for (int i = 0; i <= m; ++i) {
    tau[i] = 0.5 * t * std::pow(static_cast<double>(i) / m, grading);
  }

  std::vector<double> grid(2 * static_cast<std::size_t>(m));
  for (int i = 0; i < m; ++i) {
    const double mid = 0.5 * (tau[i] + tau[i + 1]);
    grid[i] = mid;          // midpoints in (0, t/2)
    grid[m + i] = t - mid;  // mirrored midpoints in (t/2, t)
  }

  // One inversion batch per kernel covers both halves of the convolution.
  const std::vector<double> phi = phi_kernel(pair, grid, eps);
  const std::vector<double> psi = psi_kernel(pair, grid, eps);

  double s = 0.0;
  for (int i = 0; i < m; ++i) {
    const double w = tau[i + 1] - tau[i];
    s += w * (phi[m + i] * psi[i] + phi[i] * psi[m + i]);
  }
  return s;
}

ConvolutionCheckReport verify_pair(const KernelPair& pair,
                                   const std::vector<double>& t_checkpoints,
                                   int mesh, double grading, double eps) {
  ConvolutionCheckReport rep;
  rep.t_checkpoints = t_checkpoints;
  rep.mesh_size = mesh;
  rep.grading_exponent = grading;
  rep.max_deviation = 0.0;
  rep.deviations.reserve(t_checkpoints.size());

  const int n = pair.order_index();
  const double factorial = std::tgamma(static_cast<double>(n));
  for (double t : t_checkpoints) {
    const double target = std::pow(t, n - 1.0) / factorial;
    const double dev = std::abs(sonine_convolve(pair, t, mesh, grading, eps) -
                                target);
    rep.deviations.push_back(dev);
    rep.max_deviation = std::max(rep.max_deviation, dev);
  }
  return rep;
}

}  // namespace scarpi
