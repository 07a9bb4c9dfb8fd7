#pragma once

#include <complex>

namespace scarpi {

enum class TransitionKind { Constant, Exponential, MittagLeffler, Erf };

/// A variable order alpha(t) together with its analytic Laplace transform
/// A(s). Immutable after construction; the factory functions below validate
/// parameters and pick the time- and Laplace-domain formulas.
class TransitionFunction {
 public:
  double operator()(double t) const { return value(t); }
  double value(double t) const;
  std::complex<double> laplace(std::complex<double> s) const;

  double alpha_initial() const;  // alpha(0+)
  double alpha_final() const;    // lim_{t->inf} alpha(t)

  TransitionKind kind() const { return kind_; }
  double alpha1() const { return alpha1_; }
  double alpha2() const { return alpha2_; }
  double rate() const { return c_; }
  double ml_exponent() const { return beta_; }

 private:
  friend TransitionFunction make_constant(double alpha);
  friend TransitionFunction make_exponential(double a1, double a2, double c);
  friend TransitionFunction make_mittag_leffler(double a1, double a2, double c,
                                                double beta);
  friend TransitionFunction make_erf(double a1, double a2, double c);

  TransitionFunction(TransitionKind k, double a1, double a2, double c,
                     double beta)
      : kind_(k), alpha1_(a1), alpha2_(a2), c_(c), beta_(beta) {}

  TransitionKind kind_;
  double alpha1_;
  double alpha2_;
  double c_;
  double beta_;
};

/// Constant order alpha(t) = alpha, A(s) = alpha/s. Any alpha > 0 is
/// accepted: values above 1 serve the higher-order kernel constructors, the
/// standard theory uses alpha in (0,1].
TransitionFunction make_constant(double alpha);

/// alpha(t) = a2 + (a1 - a2) e^{-ct},  A(s) = (a2 c + a1 s) / (s (c + s)).
/// Requires a1, a2 in (0,1) and c > 0.
TransitionFunction make_exponential(double a1, double a2, double c);

/// alpha(t) = a2 + (a1 - a2) E_beta(-c t^beta),
/// A(s) = (a2 c + a1 s^beta) / (s (c + s^beta)), principal branch of s^beta.
/// Requires a1, a2 in (0,1), c > 0, beta in (0,1]. beta = 1 reduces to the
/// exponential transition.
TransitionFunction make_mittag_leffler(double a1, double a2, double c,
                                       double beta);

/// alpha(t) = a1 + (a2 - a1) erf(sqrt(ct)),
/// A(s) = a1/s + (a2 - a1) sqrt(c) / (s sqrt(s + c)), principal square root.
/// Requires a1, a2 in (0,1) and c > 0.
TransitionFunction make_erf(double a1, double a2, double c);

}  // namespace scarpi
