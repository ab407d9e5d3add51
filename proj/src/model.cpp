#include "susyprop/model.hpp"

#include <cmath>
#include <stdexcept>

#include "susyprop/specfun.hpp"

namespace susyprop {

namespace {
constexpr double kSqrtHalfPi = 1.2533141373155002512;  // sqrt(pi/2)
constexpr double kSqrt2 = 1.4142135623730950488;
}  // namespace

Complex free_propagator(double x, double y, double t) {
  if (t == 0.0) throw SingularTimeError("free_propagator: t = 0");
  const double d = x - y;
  const Complex phase = kImagUnit * (d * d / (4.0 * t));
  return std::exp(phase) / std::sqrt(4.0 * M_PI * kImagUnit * t);
}

Complex free_propagator_dx(double x, double y, double t) {
  return kImagUnit * ((x - y) / (2.0 * t)) * free_propagator(x, y, t);
}

Complex free_green(double x, double y, Complex E) {
  Complex kappa = std::sqrt(E);
  if (kappa.imag() < 0.0) kappa = -kappa;
  if (kappa.imag() <= 0.0)
    throw SpectralBoundaryError("free_green: E lies on the continuous spectrum [0, inf)");
  return kImagUnit / (2.0 * kappa) * std::exp(kImagUnit * kappa * std::abs(x - y));
}

Complex osc_propagator(double x, double y, double t) {
  const double s = std::sin(t);
  if (std::abs(s) <= kSingularTimeEps)
    throw SingularTimeError("osc_propagator: |sin t| below the caustic guard");
  const Complex phase =
      kImagUnit * (((x * x + y * y) * std::cos(t) - 2.0 * x * y) / (4.0 * s));
  return std::exp(phase) / std::sqrt(4.0 * M_PI * kImagUnit * s);
}

Complex osc_propagator_dx(double x, double y, double t) {
  const double s = std::sin(t);
  if (std::abs(s) <= kSingularTimeEps)
    throw SingularTimeError("osc_propagator: |sin t| below the caustic guard");
  return kImagUnit * ((x * std::cos(t) - y) / (2.0 * s)) * osc_propagator(x, y, t);
}

namespace {

// f_{l,r}(x) = sqrt(pi/2) exp(x^2/4) erfc(∓x/sqrt(2)); the erfc form avoids
// the 1 - erf cancellation in the decaying tails.
double osc_f_l(double x) { return kSqrtHalfPi * std::exp(0.25 * x * x) * std::erfc(-x / kSqrt2); }
double osc_f_r(double x) { return kSqrtHalfPi * std::exp(0.25 * x * x) * std::erfc(x / kSqrt2); }
double osc_f_l_prime(double x) { return 0.5 * x * osc_f_l(x) + std::exp(-0.25 * x * x); }
double osc_f_r_prime(double x) { return 0.5 * x * osc_f_r(x) - std::exp(-0.25 * x * x); }

}  // namespace

Complex osc_green_neg_half(double x, double y) {
  const double lo = std::min(x, y);
  const double hi = std::max(x, y);
  const double denom = osc_f_l_prime(0.0) * osc_f_r(0.0) - osc_f_l(0.0) * osc_f_r_prime(0.0);
  return Complex(osc_f_l(lo) * osc_f_r(hi) / denom, 0.0);
}

Complex JostPair::f_l(double x) const {
  if (kind == BaseKind::Free) return std::exp(decay * x);
  return osc_f_l(x);
}

Complex JostPair::f_l_prime(double x) const {
  if (kind == BaseKind::Free) return decay * std::exp(decay * x);
  return osc_f_l_prime(x);
}

Complex JostPair::f_r(double x) const {
  if (kind == BaseKind::Free) return std::exp(-decay * x);
  return osc_f_r(x);
}

Complex JostPair::f_r_prime(double x) const {
  if (kind == BaseKind::Free) return -decay * std::exp(-decay * x);
  return osc_f_r_prime(x);
}

Complex JostPair::wronskian(double x) const {
  return f_l(x) * f_r_prime(x) - f_l_prime(x) * f_r(x);
}

Complex JostPair::resolvent_denominator() const { return -wronskian(0.0); }

double BaseProblem::potential(double x) const {
  return kind_ == BaseKind::Free ? 0.0 : 0.25 * x * x;
}

double BaseProblem::eigenvalue(int n) const {
  if (kind_ != BaseKind::Oscillator)
    throw Error("BaseProblem: the free particle has no discrete spectrum");
  if (n < 0) throw std::invalid_argument("BaseProblem::eigenvalue: n >= 0");
  return n + 0.5;
}

double BaseProblem::eigenfunction(int n, double x) const {
  if (kind_ != BaseKind::Oscillator)
    throw Error("BaseProblem: the free particle has no discrete spectrum");
  return osc_eigenfunction(n, x);
}

double BaseProblem::eigenfunction_deriv(int n, double x) const {
  if (kind_ != BaseKind::Oscillator)
    throw Error("BaseProblem: the free particle has no discrete spectrum");
  return osc_eigenfunction_deriv(n, x);
}

Complex BaseProblem::propagator(double x, double y, double t) const {
  return kind_ == BaseKind::Free ? free_propagator(x, y, t) : osc_propagator(x, y, t);
}

Complex BaseProblem::propagator_dx(double x, double y, double t) const {
  return kind_ == BaseKind::Free ? free_propagator_dx(x, y, t) : osc_propagator_dx(x, y, t);
}

Complex BaseProblem::green(double x, double y, Complex E) const {
  if (kind_ == BaseKind::Free) return free_green(x, y, E);
  if (std::abs(E - Complex(-0.5, 0.0)) > 1e-12)
    throw Error("BaseProblem: oscillator resolvent is provided only at E = -1/2");
  return osc_green_neg_half(x, y);
}

JostPair BaseProblem::jost(double alpha) const {
  if (kind_ == BaseKind::Free) {
    if (alpha >= 0.0)
      throw SpectralBoundaryError("jost: alpha must lie below the continuous spectrum");
    return JostPair{kind_, alpha, std::sqrt(-alpha)};
  }
  if (std::abs(alpha + 0.5) > 1e-12)
    throw Error("jost: oscillator pair is provided only at alpha = -1/2");
  return JostPair{kind_, alpha, 0.0};
}

}  // namespace susyprop
