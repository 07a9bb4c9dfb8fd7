#pragma once

#include <vector>

#include "scarpi/contour_inversion.hpp"
#include "scarpi/kernels.hpp"

namespace scarpi {

struct ConvolutionCheckReport {
  std::vector<double> t_checkpoints;
  std::vector<double> deviations;  // |S(t) - target(t)| per checkpoint
  double max_deviation = 0.0;
  int mesh_size = 0;
  double grading_exponent = 0.0;
};

/// Quadrature value of S(t) = int_0^t phi(t - tau) psi(tau) dtau. Both
/// kernels carry an integrable endpoint singularity, so the mesh is graded
/// toward both ends: cells tau_i = (t/2) (i/M)^grading on [0, t/2], mirrored
/// on [t/2, t], with midpoint (product-rectangle) evaluation. Each kernel is
/// inverted once on the combined midpoint grid.
/// For a valid pair of order index n, S(t) = t^{n-1}/(n-1)!.
/// Requires t > 0, mesh >= 64, grading >= 1.
double sonine_convolve(const KernelPair& pair, double t, int mesh,
                       double grading, double eps = kDefaultEps);

/// sonine_convolve over a list of checkpoints, with deviations taken against
/// the order-n target t^{n-1}/(n-1)!.
ConvolutionCheckReport verify_pair(const KernelPair& pair,
                                   const std::vector<double>& t_checkpoints,
                                   int mesh, double grading,
                                   double eps = kDefaultEps);

}  // namespace scarpi
