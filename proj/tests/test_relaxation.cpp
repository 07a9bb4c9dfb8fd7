#include <cmath>
#include <complex>
#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "scarpi/kernels.hpp"
#include "scarpi/relaxation.hpp"
#include "scarpi/special_functions.hpp"

using namespace scarpi;
using cx = std::complex<double>;

namespace {

std::vector<double> log_grid(double a, double b, int n) {
  std::vector<double> g(n);
  for (int i = 0; i < n; ++i) {
    g[i] = std::exp(std::log(a) + (std::log(b) - std::log(a)) * i / (n - 1));
  }
  return g;
}

double max_abs_diff(const std::vector<double>& a,
                    const std::vector<double>& b) {
  double m = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    m = std::max(m, std::abs(a[i] - b[i]));
  }
  return m;
}

}  // namespace

TEST_CASE("constant order 1 relaxes exponentially") {
  const RelaxationProblem problem(make_constant(1.0), 1.0, 1.0);
  const std::vector<double> ts = log_grid(0.1, 10.0, 15);
  const TimeSeries y = solve_lt(problem, ts);
  for (std::size_t i = 0; i < ts.size(); ++i) {
    CHECK(std::abs(y.values[i] - std::exp(-ts[i])) <= 1e-10);
  }
}

TEST_CASE("constant order 0.6 matches the Mittag-Leffler solution") {
  const RelaxationProblem problem(make_constant(0.6), 1.0, 1.0);
  const std::vector<double> ts = log_grid(0.1, 10.0, 15);
  const TimeSeries y = solve_lt(problem, ts);
  for (std::size_t i = 0; i < ts.size(); ++i) {
    const double ref = mittag_leffler_at(0.6, 1.0, ts[i]);
    CHECK(std::abs(y.values[i] - ref) <= 1e-8);
  }
  CHECK(std::abs(solve_lt(problem, {1.0}).values[0] - 0.413327340943106) <=
        1e-8);
}

TEST_CASE("solutions decay monotonically and recover the initial value") {
  const TransitionFunction trs[] = {make_exponential(0.6, 0.8, 2.0),
                                    make_mittag_leffler(0.6, 0.8, 2.0, 0.7),
                                    make_erf(0.6, 0.8, 2.0)};
  for (const TransitionFunction& tr : trs) {
    const RelaxationProblem problem(tr, 1.0, 1.0);
    const std::vector<double> ts = log_grid(0.1, 10.0, 30);
    const TimeSeries y = solve_lt(problem, ts);
    for (std::size_t i = 1; i < ts.size(); ++i) {
      CHECK(y.values[i] < y.values[i - 1]);
    }
    CHECK(std::abs(solve_lt(problem, {1e-4}).values[0] - 1.0) <= 0.02);
  }
}

TEST_CASE("near-origin and asymptotic regimes bracket the references") {
  const TransitionFunction trs[] = {make_exponential(0.6, 0.8, 2.0),
                                    make_mittag_leffler(0.6, 0.8, 2.0, 0.7),
                                    make_erf(0.6, 0.8, 2.0)};
  for (const TransitionFunction& tr : trs) {
    const RelaxationProblem problem(tr, 1.0, 1.0);
    for (double t : {0.05, 0.1}) {
      const double y = solve_lt(problem, {t}).values[0];
      const double y1 = mittag_leffler_at(0.6, 1.0, t);
      const double y2 = mittag_leffler_at(0.8, 1.0, t);
      CHECK(std::abs(y - y1) < std::abs(y - y2));
    }
    for (double t : {50.0, 80.0}) {
      const double y = solve_lt(problem, {t}).values[0];
      const double y1 = mittag_leffler_at(0.6, 1.0, t);
      const double y2 = mittag_leffler_at(0.8, 1.0, t);
      CHECK(std::abs(y - y2) < std::abs(y - y1));
    }
  }
}

TEST_CASE("growth problems are rejected") {
  CHECK_THROWS_AS(RelaxationProblem(make_constant(0.6), -1.0, 1.0),
                  std::domain_error);
}

TEST_CASE("reference constant solution") {
  const std::vector<double> ts = {0.0, 1.0};
  const TimeSeries a8 = reference_constant_solution(0.8, 1.0, 1.0, ts);
  CHECK(a8.values[0] == 1.0);
  const TimeSeries a1 = reference_constant_solution(1.0, 1.0, 2.0, {1.0});
  CHECK(std::abs(a1.values[0] - 2.0 * std::exp(-1.0)) <= 1e-12);
  const TimeSeries a6 = reference_constant_solution(0.6, 1.0, 1.0, {1.0});
  CHECK(std::abs(a6.values[0] - 0.413327340943106) <= 1e-12);
  CHECK_THROWS_AS(reference_constant_solution(1.2, 1.0, 1.0, ts),
                  std::domain_error);
  CHECK_THROWS_AS(reference_constant_solution(0.0, 1.0, 1.0, ts),
                  std::domain_error);
}

TEST_CASE("CQ weights: Psi = 1/s gives flat weights h") {
  const CQScheme scheme = cq_weights(
      [](cx s) { return 1.0 / s; }, 0.37, 100, CQGenerator::BDF1);
  CHECK(scheme.weights.size() == 101);
  for (double w : scheme.weights) {
    CHECK(std::abs(w - 0.37) <= 1e-7 * 0.37);
  }
}

TEST_CASE("CQ weights: Psi = s^{-1/2} matches the binomial series") {
  const double h = 0.1;
  const CQScheme scheme = cq_weights(
      [](cx s) { return std::pow(s, -0.5); }, h, 2000, CQGenerator::BDF1);
  double coeff = 1.0;  // (-1)^n C(-1/2, n) = (2n-1)!!/(2n)!!
  for (int n = 0; n <= 50; ++n) {
    if (n > 0) coeff *= (2.0 * n - 1.0) / (2.0 * n);
    const double ref = std::sqrt(h) * coeff;
    CHECK(std::abs(scheme.weights[n] - ref) <= 1e-10 * ref);
  }
  CHECK(scheme.contour_radius > 0.0);
  CHECK(scheme.contour_radius < 1.0);
}

TEST_CASE("CQ weights with the BDF2 generator") {
  // Psi = 1/s: Psi(delta(zeta)/h) = h / ((1 - zeta)(3/2 - zeta/2)) expands
  // to omega_n = h (1 - 3^{-n-1})
  const double h = 0.2;
  const CQScheme scheme = cq_weights(
      [](cx s) { return 1.0 / s; }, h, 200, CQGenerator::BDF2);
  for (int n = 0; n <= 30; ++n) {
    const double ref = h * (1.0 - std::pow(3.0, -(n + 1.0)));
    CHECK(std::abs(scheme.weights[n] - ref) <= 1e-10 * ref);
  }
}

TEST_CASE("BDF2 marching stays close to the transform route") {
  const RelaxationProblem problem(make_exponential(0.6, 0.8, 2.0), 1.0, 1.0);
  const TimeSeries cq = solve_cq(problem, 1e-2, 500, CQGenerator::BDF2);
  const std::vector<double> grid(cq.times.begin() + 1, cq.times.end());
  const TimeSeries lt = solve_lt(problem, grid);
  double worst = 0.0;
  for (std::size_t i = 0; i < grid.size(); ++i) {
    if (grid[i] >= 0.1) {
      worst = std::max(worst, std::abs(cq.values[i + 1] - lt.values[i]));
    }
  }
  CHECK(worst <= 2e-2);
  CHECK(std::abs(cq.values.back() - lt.values.back()) <= 1e-3);
}

TEST_CASE("cumulative CQ weights reproduce the kernel integral") {
  // sum of the first M+1 weights is the CQ value of int_0^T psi dtau, which
  // the transform route gives as the inverse of Psi(s)/s at T
  const KernelPair pair = make_kernel_pair(make_exponential(0.6, 0.8, 2.0));
  const double h = 0.01;
  const int m = 1000;
  const CQScheme scheme = cq_weights(
      [&pair](cx s) { return pair.psi_laplace(s); }, h, m);
  double acc = 0.0;
  for (double w : scheme.weights) acc += w;
  const LaplaceFunction integral{
      [&pair](cx s) { return pair.psi_laplace(s) / s; },
      "kernel integral transform"};
  const double ref = invert_at(integral, (m + 1) * h);
  CHECK(std::abs(acc - ref) <= 0.05 * ref);
}

TEST_CASE("CQ marching: degenerate cases") {
  const RelaxationProblem still(make_constant(0.6), 0.0, 3.0);
  const TimeSeries y = solve_cq(still, 0.1, 50);
  CHECK(y.times.front() == 0.0);
  CHECK(y.times.size() == 51);
  for (double v : y.values) CHECK(v == 3.0);

  const RelaxationProblem order1(make_constant(1.0), 1.0, 1.0);
  const TimeSeries z = solve_cq(order1, 1e-3, 1000);
  CHECK(std::abs(z.values.back() - std::exp(-1.0)) <= 5e-3);
}

TEST_CASE("CQ agrees with the transform route away from the first steps") {
  const RelaxationProblem problem(make_exponential(0.6, 0.8, 2.0), 1.0, 1.0);

  const TimeSeries fine = solve_cq(problem, 1e-3, 5000);
  std::vector<double> grid_fine(fine.times.begin() + 1, fine.times.end());
  const TimeSeries lt_fine = solve_lt(problem, grid_fine);
  std::vector<double> cq_fine(fine.values.begin() + 1, fine.values.end());

  // max over t in [0.01, 5]; the uncorrected start makes the first few
  // steps O(h^{alpha1}) instead
  double max_fine = 0.0;
  for (std::size_t i = 0; i < grid_fine.size(); ++i) {
    if (grid_fine[i] >= 0.01) {
      max_fine = std::max(max_fine,
                          std::abs(cq_fine[i] - lt_fine.values[i]));
    }
  }
  CHECK(max_fine <= 5e-3);

  const TimeSeries coarse = solve_cq(problem, 2e-3, 2500);
  std::vector<double> grid_coarse(coarse.times.begin() + 1,
                                  coarse.times.end());
  const TimeSeries lt_coarse = solve_lt(problem, grid_coarse);
  double max_coarse = 0.0;
  for (std::size_t i = 0; i < grid_coarse.size(); ++i) {
    if (grid_coarse[i] >= 0.01) {
      max_coarse = std::max(
          max_coarse, std::abs(coarse.values[i + 1] - lt_coarse.values[i]));
    }
  }
  // first-order scheme: halving h roughly halves the error
  const double factor = max_coarse / max_fine;
  CHECK(factor >= 1.6);
  CHECK(factor <= 2.4);
}

TEST_CASE("solver argument validation") {
  const RelaxationProblem problem(make_constant(0.6), 1.0, 1.0);
  CHECK_THROWS_AS(solve_cq(problem, 0.0, 10), std::domain_error);
  CHECK_THROWS_AS(solve_cq(problem, 0.1, 0), std::domain_error);
  CHECK_THROWS_AS(cq_weights([](cx s) { return 1.0 / s; }, 0.1, 10,
                             CQGenerator::BDF1, 1.5),
                  std::domain_error);
  CHECK_THROWS_AS(solve_lt(problem, {0.0}), std::domain_error);
}
