#pragma once

namespace scarpi {

/// Gamma function on (0, inf). Throws std::domain_error for x <= 0.
double gamma_fn(double x);

/// One-parameter Mittag-Leffler function E_beta(x) for beta in (0,1] and
/// x <= 0. Dispatches between the power series (moderate |x|) and numerical
/// inversion of the transform s^{beta-1}/(s^beta - x).
double mittag_leffler(double beta, double x);

/// E_beta(-c t^beta) for c >= 0, t >= 0. Same dispatch as mittag_leffler but
/// the inversion route runs at the native time t, which conditions the
/// contour correctly when t is far from 1.
double mittag_leffler_at(double beta, double c, double t);

namespace detail {

/// Power-series route: sum x^k / Gamma(beta k + 1) with compensated
/// accumulation in extended precision until the term magnitude drops below
/// 1e-16. Accurate for moderate |x|; loses digits to cancellation as the
/// peak term grows.
double ml_series(double beta, double x);

/// Transform route: E_beta(-c t^beta) as the inverse Laplace transform of
/// s^{beta-1}/(s^beta + c) at time t. Requires c > 0, t > 0.
double ml_by_inversion(double beta, double c, double t);

}  // namespace detail

}  // namespace scarpi
