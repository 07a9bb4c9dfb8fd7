#include "scarpi/transitions.hpp"

#include <cmath>
#include <stdexcept>

#include "scarpi/special_functions.hpp"

namespace scarpi {

namespace {

void require_unit_interval(double a, const char* name) {
  if (!(a > 0.0 && a < 1.0)) {
    throw std::domain_error(std::string("transition: ") + name +
                            " must lie in (0,1)");
  }
}

void require_positive_rate(double c) {
  if (!(c > 0.0)) throw std::domain_error("transition: c must be positive");
}

}  // namespace

double TransitionFunction::value(double t) const {
  switch (kind_) {
    case TransitionKind::Constant:
      return alpha1_;
    case TransitionKind::Exponential:
      return alpha2_ + (alpha1_ - alpha2_) * std::exp(-c_ * t);
    case TransitionKind::MittagLeffler:
      return alpha2_ + (alpha1_ - alpha2_) * mittag_leffler_at(beta_, c_, t);
    case TransitionKind::Erf:
      return alpha1_ + (alpha2_ - alpha1_) * std::erf(std::sqrt(c_ * t));
  }
  return alpha1_;
}

std::complex<double> TransitionFunction::laplace(std::complex<double> s) const {
  switch (kind_) {
    case TransitionKind::Constant:
      return alpha1_ / s;
    case TransitionKind::Exponential:
      return (alpha2_ * c_ + alpha1_ * s) / (s * (c_ + s));
    case TransitionKind::MittagLeffler: {
      const std::complex<double> sb = std::pow(s, beta_);
      return (alpha2_ * c_ + alpha1_ * sb) / (s * (c_ + sb));
    }
    case TransitionKind::Erf:
      return alpha1_ / s +
             (alpha2_ - alpha1_) * std::sqrt(c_) / (s * std::sqrt(s + c_));
  }
  return alpha1_ / s;
}

double TransitionFunction::alpha_initial() const { return alpha1_; }

double TransitionFunction::alpha_final() const {
  return kind_ == TransitionKind::Constant ? alpha1_ : alpha2_;
}

TransitionFunction make_constant(double alpha) {
  if (!(alpha > 0.0)) {
    throw std::domain_error("make_constant: alpha must be positive");
  }
  return TransitionFunction(TransitionKind::Constant, alpha, alpha, 0.0, 1.0);
}

TransitionFunction make_exponential(double a1, double a2, double c) {
  require_unit_interval(a1, "alpha1");
  require_unit_interval(a2, "alpha2");
  require_positive_rate(c);
  return TransitionFunction(TransitionKind::Exponential, a1, a2, c, 1.0);
}

TransitionFunction make_mittag_leffler(double a1, double a2, double c,
                                       double beta) {
  require_unit_interval(a1, "alpha1");
  require_unit_interval(a2, "alpha2");
  require_positive_rate(c);
  if (!(beta > 0.0 && beta <= 1.0)) {
    throw std::domain_error("make_mittag_leffler: beta must lie in (0,1]");
  }
  return TransitionFunction(TransitionKind::MittagLeffler, a1, a2, c, beta);
}

TransitionFunction make_erf(double a1, double a2, double c) {
  require_unit_interval(a1, "alpha1");
  require_unit_interval(a2, "alpha2");
  require_positive_rate(c);
  return TransitionFunction(TransitionKind::Erf, a1, a2, c, 1.0);
}

}  // namespace scarpi
