#include "susyprop/susy.hpp"

#include <cmath>
#include <stdexcept>

#include "susyprop/specfun.hpp"

namespace susyprop {

namespace {

constexpr double kSqrt2 = 1.4142135623730950488;
constexpr double kSqrt2OverPi = 0.79788456080286535588;  // sqrt(2/pi)

// min |u|/envelope over a probe window must not fall below 1e-6 of its max;
// Im C != 0 (resp. Im c off the cosh zero lines) guarantees this
// analytically, so a violation indicates bad parameters.
double checked_floor(const Factorization& f, double half_width) {
  const int n = 321;
  double lo = 1e300, hi = 0.0;
  for (int i = 0; i < n; ++i) {
    const double x = -half_width + 2.0 * half_width * i / (n - 1);
    const double r = std::abs(f.u(x)) / f.envelope(x);
    lo = std::min(lo, r);
    hi = std::max(hi, r);
  }
  if (lo <= 1e-6 * hi)
    throw NearZeroError("transformation function comes too close to zero on the real line");
  return 1e-6 * hi;
}

}  // namespace

Complex Factorization::u(double x) const {
  if (const auto* osc = std::get_if<OscillatorParams>(&params))
    return std::exp(0.25 * x * x) * (osc->C + std::erf(x / kSqrt2));
  const auto& sol = std::get<SolitonParams>(params);
  return std::cosh(sol.a * x + sol.c);
}

Complex Factorization::u_prime(double x) const {
  if (std::holds_alternative<OscillatorParams>(params))
    return 0.5 * x * u(x) + kSqrt2OverPi * std::exp(-0.25 * x * x);
  const auto& sol = std::get<SolitonParams>(params);
  return sol.a * std::sinh(sol.a * x + sol.c);
}

Complex Factorization::u_second(double x) const {
  // differentiating the closed forms once more reproduces (V0 - alpha) u
  if (std::holds_alternative<OscillatorParams>(params))
    return (0.25 * x * x + 0.5) * u(x);
  const auto& sol = std::get<SolitonParams>(params);
  return sol.a * sol.a * std::cosh(sol.a * x + sol.c);
}

double Factorization::envelope(double x) const {
  if (std::holds_alternative<OscillatorParams>(params))
    return std::exp(0.25 * x * x);
  const auto& sol = std::get<SolitonParams>(params);
  return std::cosh(sol.a * x + sol.c.real());
}

Complex Factorization::log_derivative(double x) const {
  const Complex ux = u(x);
  if (std::abs(ux) < near_zero_floor * envelope(x))
    throw NearZeroError("u(x) below the near-zero threshold");
  return u_prime(x) / ux;
}

Factorization make_oscillator_transform(Complex C) {
  if (C.imag() == 0.0)
    throw NearZeroError("oscillator transform: Im C = 0 risks a real zero of u");
  Factorization f{BaseProblem::oscillator(), -0.5, CaseTag::CaseII,
                  std::pow(2.0 * M_PI, -0.25) * std::sqrt(C * C - 1.0),
                  OscillatorParams{C}, 0.0};
  f.near_zero_floor = checked_floor(f, 8.0);
  return f;
}

Factorization make_soliton_transform(double a, double b) {
  if (!(a > 0.0)) throw std::invalid_argument("soliton transform: a must be > 0");
  if (b == 0.0 || std::abs(std::abs(b) - a) < 1e-12)
    throw std::invalid_argument("soliton transform: b must be nonzero with |b| != a");
  const Complex c = std::atanh((b * b - a * a) / (2.0 * kImagUnit * a * b));
  if (c.imag() == 0.0)
    throw NearZeroError("soliton transform: Im c = 0 risks a real zero of u");
  Factorization f{BaseProblem::free_particle(), -a * a, CaseTag::CaseII,
                  std::sqrt(0.5 * a), SolitonParams{a, b, c}, 0.0};
  f.near_zero_floor = checked_floor(f, 8.0 / a);
  return f;
}

Complex partner_potential(const Factorization& f, double x) {
  const Complex w = f.log_derivative(x);
  return f.base.potential(x) - 2.0 * (f.u_second(x) / f.u(x) - w * w);
}

Complex apply_L(const Factorization& f, Complex g, Complex g_prime, double x) {
  return -f.log_derivative(x) * g + g_prime;
}

Complex apply_Lt(const Factorization& f, Complex g, Complex g_prime, double x) {
  return -f.log_derivative(x) * g - g_prime;
}

Complex transformed_eigenfunction(const Factorization& f, int n, double x) {
  if (f.base.kind() != BaseKind::Oscillator)
    throw Error("transformed_eigenfunction: base problem has no discrete spectrum");
  if (n < 0) throw std::invalid_argument("transformed_eigenfunction: n >= 0");
  const double en = f.base.eigenvalue(n);
  if (std::abs(en - f.alpha) < 1e-14)
    throw Error("transformed_eigenfunction: E_n = alpha degenerates the normalization");
  const Complex lg = apply_L(f, f.base.eigenfunction(n, x),
                             f.base.eigenfunction_deriv(n, x), x);
  return lg / std::sqrt(en - f.alpha);
}

Complex bound_state(const Factorization& f, double x) {
  if (f.case_tag != CaseTag::CaseII)
    throw NoBoundStateError("bound_state: case-I transformations add no level");
  const Complex ux = f.u(x);
  if (std::abs(ux) < f.near_zero_floor * f.envelope(x))
    throw NearZeroError("u(x) below the near-zero threshold");
  return f.n_alpha / ux;
}

Complex bilinear_norm(const std::function<Complex(double)>& g, QuadratureSpec spec) {
  const double radius = spec.truncation_radius > 0.0 ? spec.truncation_radius : 16.0;
  for (double edge : {-radius, -radius - 2.0, radius, radius + 2.0}) {
    if (std::norm(g(edge)) > spec.abs_tol)
      throw Error("bilinear_norm: integrand has not decayed at the truncation radius");
  }
  Integral r = integrate([&](double x) { const Complex v = g(x); return v * v; },
                         -radius, radius, spec);
  if (!r.converged)
    throw QuadratureError("bilinear_norm: quadrature did not converge", r.error);
  return r.value;
}

std::vector<Complex> PartnerModel::eigenfunctions(int n_max, double x) const {
  if (fact.base.kind() != BaseKind::Oscillator)
    throw Error("PartnerModel::eigenfunctions: base has no discrete spectrum");
  const std::vector<double> psi = osc_eigenfunctions(n_max, x);
  const Complex w = fact.log_derivative(x);
  std::vector<Complex> phi(n_max + 1);
  for (int n = 0; n <= n_max; ++n) {
    const double dpsi =
        -0.5 * x * psi[n] + (n > 0 ? std::sqrt(static_cast<double>(n)) * psi[n - 1] : 0.0);
    phi[n] = (-w * psi[n] + dpsi) / std::sqrt(fact.base.eigenvalue(n) - fact.alpha);
  }
  return phi;
}

PartnerModel make_oscillator_partner(Complex C) {
  return PartnerModel{make_oscillator_transform(C)};
}

PartnerModel make_soliton_partner(double a, double b) {
  return PartnerModel{make_soliton_transform(a, b)};
}

}  // namespace susyprop
