#include "scarpi/kernels.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <string>

namespace scarpi {

namespace {

constexpr double kPi = std::numbers::pi;

// Angular offset for boundary values of Phi across the cut: evaluated at
// arg s = pi (1 - delta) since Phi itself is undefined on the cut.
constexpr double kCutOffset = 1e-6;

// Thresholds for the sampled limit conditions in kochubei_check. The decade
// trend carries the limit statement; the magnitudes rule out flat curves.
// With exponents close to 0 (orders near 1) a wider sigma_grid is needed for
// the magnitudes to clear these bars.
constexpr double kSmallValue = 1e-2;
constexpr double kLargeValue = 1e2;
constexpr double kBlowupValue = 1e1;

LaplaceFunction as_laplace_function(const KernelPair& pair, bool derivative) {
  if (derivative) {
    return {[pair](std::complex<double> s) { return pair.phi_laplace(s); },
            "kernel transform: branch point at the origin, cut on the "
            "negative real axis"};
  }
  return {[pair](std::complex<double> s) { return pair.psi_laplace(s); },
          "kernel transform: branch point at the origin, cut on the "
          "negative real axis"};
}

}  // namespace

std::complex<double> complex_power(std::complex<double> s,
                                   std::complex<double> g) {
  if (s == std::complex<double>(0.0, 0.0)) {
    throw std::domain_error("complex_power: s = 0");
  }
  if (s.imag() == 0.0 && s.real() < 0.0) {
    throw std::domain_error(
        "complex_power: s on the negative real axis (branch cut)");
  }
  return std::exp(g * std::log(s));
}

std::complex<double> KernelPair::phi_laplace(std::complex<double> s) const {
  return complex_power(
      s, s * transition_.laplace(s) - static_cast<double>(order_index_));
}

std::complex<double> KernelPair::psi_laplace(std::complex<double> s) const {
  return complex_power(s, -s * transition_.laplace(s));
}

KernelPair make_kernel_pair(const TransitionFunction& transition) {
  return higher_order_pair(transition, 1);
}

KernelPair higher_order_pair(const TransitionFunction& transition, int n) {
  if (n < 1) throw std::domain_error("higher_order_pair: n must be >= 1");
  const double lo = n - 1.0;
  const double hi = static_cast<double>(n);
  auto in_range = [lo, hi](double a) { return a > lo && a <= hi; };
  if (!in_range(transition.alpha_initial()) ||
      !in_range(transition.alpha_final())) {
    throw std::domain_error("higher_order_pair: transition range not in (" +
                            std::to_string(n - 1) + "," + std::to_string(n) +
                            "]");
  }
  // Sampled interior check; the catalog transitions are monotone but the
  // limits alone do not cover a misdeclared order index.
  for (int i = 0; i <= 200; ++i) {
    const double t = std::pow(10.0, -6.0 + 9.0 * i / 200.0);
    if (!in_range(transition.value(t))) {
      throw std::domain_error(
          "higher_order_pair: transition leaves (n-1, n] at t=" +
          std::to_string(t));
    }
  }
  return KernelPair(transition, n);
}

std::vector<double> phi_kernel(const KernelPair& pair,
                               const std::vector<double>& t_grid, double eps) {
  // Phi(s) = s^{s A(s) - n} decays at infinity only if alpha(0+) < n.
  const double limit_exp =
      pair.transition().alpha_initial() - pair.order_index();
  if (limit_exp >= 0.0) {
    throw std::domain_error(
        "phi_kernel: transform does not vanish at infinity (limit exponent " +
        std::to_string(limit_exp) + ")");
  }
  return invert(as_laplace_function(pair, true), t_grid, eps);
}

std::vector<double> psi_kernel(const KernelPair& pair,
                               const std::vector<double>& t_grid, double eps) {
  return invert(as_laplace_function(pair, false), t_grid, eps);
}

std::vector<double> phi_j_kernel(const KernelPair& pair, int j,
                                 const std::vector<double>& t_grid,
                                 double eps) {
  const int n = pair.order_index();
  if (j < 0 || j > n - 1) {
    throw std::domain_error("phi_j_kernel: j must lie in [0, n-1]");
  }
  // s^{n-j-1} Phi(s) = s^{s A(s) - j - 1}; invertible only if it decays.
  const double limit_exp = pair.transition().alpha_initial() - (j + 1.0);
  if (limit_exp >= 0.0) {
    throw std::domain_error(
        "phi_j_kernel: transform s^{n-j-1} Phi(s) does not vanish at "
        "infinity for j=" +
        std::to_string(j) + " (limit exponent " + std::to_string(limit_exp) +
        ")");
  }
  LaplaceFunction f{
      [pair, j](std::complex<double> s) {
        return complex_power(s, s * pair.transition().laplace(s) - (j + 1.0));
      },
      "auxiliary kernel transform: branch point at the origin, cut on the "
      "negative real axis"};
  return invert(f, t_grid, eps);
}

std::vector<double> spectral_density(const KernelPair& pair,
                                     const std::vector<double>& r_grid) {
  const TransitionFunction& tr = pair.transition();
  const bool closed_form = tr.kind() == TransitionKind::Exponential &&
                           pair.order_index() == 1;
  std::vector<double> out;
  out.reserve(r_grid.size());
  for (double r : r_grid) {
    if (!(r > 0.0)) {
      throw std::domain_error("spectral_density: r must be positive");
    }
    if (closed_form) {
      const double a1 = tr.alpha1();
      const double a2 = tr.alpha2();
      const double c = tr.rate();
      if (std::abs(r - c) <= 1e-9) {
        throw std::domain_error(
            "spectral_density: r within 1e-9 of the singular point r = c");
      }
      const double g = ((a2 - 1.0) * c - (a1 - 1.0) * r) / (c - r);
      out.push_back(-std::pow(r, g) * std::sin(kPi * g) / kPi);
    } else {
      const std::complex<double> s =
          std::polar(r, kPi * (1.0 - kCutOffset));
      out.push_back(-pair.phi_laplace(s).imag() / kPi);
    }
  }
  return out;
}

KochubeiReport kochubei_check(const KernelPair& pair,
                              const std::vector<double>& r_grid,
                              const std::vector<double>& sigma_grid,
                              double density_tolerance) {
  if (r_grid.empty() || sigma_grid.empty()) {
    throw std::domain_error("kochubei_check: grids must be non-empty");
  }
  KochubeiReport rep;

  rep.a1_finite = true;
  double sigma_min = sigma_grid.front();
  double sigma_max = sigma_grid.front();
  for (double sigma : sigma_grid) {
    if (!(sigma > 0.0)) {
      throw std::domain_error("kochubei_check: sigma must be positive");
    }
    const double v = pair.phi_laplace({sigma, 0.0}).real();
    if (!std::isfinite(v)) rep.a1_finite = false;
    sigma_min = std::min(sigma_min, sigma);
    sigma_max = std::max(sigma_max, sigma);
  }

  const std::vector<double> density = spectral_density(pair, r_grid);
  rep.min_density = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < density.size(); ++i) {
    if (density[i] < rep.min_density) {
      rep.min_density = density[i];
      rep.argmin_r = r_grid[i];
    }
  }
  rep.a2_nonnegative = rep.min_density >= -density_tolerance;

  rep.phi_at_sigma_max = pair.phi_laplace({sigma_max, 0.0}).real();
  rep.sigma_phi_at_sigma_max = sigma_max * rep.phi_at_sigma_max;
  const double phi_inner_hi = pair.phi_laplace({sigma_max / 10.0, 0.0}).real();
  rep.a3_decay_at_inf = std::abs(rep.phi_at_sigma_max) <= kSmallValue &&
                        std::abs(rep.phi_at_sigma_max) < std::abs(phi_inner_hi) &&
                        rep.sigma_phi_at_sigma_max >= kLargeValue &&
                        rep.sigma_phi_at_sigma_max > sigma_max / 10.0 * phi_inner_hi;

  rep.phi_at_sigma_min = pair.phi_laplace({sigma_min, 0.0}).real();
  rep.sigma_phi_at_sigma_min = sigma_min * rep.phi_at_sigma_min;
  const double phi_inner_lo = pair.phi_laplace({sigma_min * 10.0, 0.0}).real();
  rep.a4_blowup_at_zero =
      rep.phi_at_sigma_min >= kBlowupValue &&
      rep.phi_at_sigma_min > phi_inner_lo &&
      std::abs(rep.sigma_phi_at_sigma_min) <= kSmallValue &&
      std::abs(rep.sigma_phi_at_sigma_min) < sigma_min * 10.0 * phi_inner_lo;

  return rep;
}

}  // namespace scarpi
