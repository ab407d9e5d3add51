// Independent reference implementations used only by tests: every value a
// test asserts against either comes from one of these oracles, from the
// standard library, or is a closed-form constant derived by hand.
#pragma once

#include <cmath>
#include <complex>
#include <vector>

namespace test_oracle {

using Complex = std::complex<double>;
inline constexpr Complex kI{0.0, 1.0};

// Alternating Maclaurin series for erf; converges for moderate |z|.
inline Complex taylor_erf(Complex z) {
  Complex term = z, sum = z;
  for (int k = 1; k < 80; ++k) {
    term *= -z * z / static_cast<double>(k);
    sum += term / static_cast<double>(2 * k + 1);
    if (std::abs(term) < 1e-20 * std::abs(sum)) break;
  }
  return 2.0 / std::sqrt(M_PI) * sum;
}

// Laplace continued fraction for w(z); accurate for large |z|, Im z >= 0.
inline Complex cf_faddeeva(Complex z, int terms = 40) {
  Complex r{0.0, 0.0};
  for (int k = terms; k >= 1; --k) r = (0.5 * k) / (z - r);
  return kI / std::sqrt(M_PI) / (z - r);
}

// Exact evolution of a normalized Gaussian packet under i dPhi/dt = -Phi''.
inline Complex free_gaussian(double center, double width, double momentum, double x,
                             double t) {
  const Complex denom = width * width + 2.0 * kI * t;
  const double xs = x - center;
  return std::pow(M_PI * width * width, -0.25) * std::sqrt(width * width / denom) *
         std::exp(kI * (momentum * xs - momentum * momentum * t) -
                  (xs - 2.0 * momentum * t) * (xs - 2.0 * momentum * t) / (2.0 * denom));
}

// Central finite differences for scalar oracles.
template <class F>
double central_d1(F&& f, double x, double h) {
  return (f(x + h) - f(x - h)) / (2.0 * h);
}

template <class F>
Complex fd_laplacian4(F&& f, double x, double h) {
  return (-f(x + 2 * h) + 16.0 * f(x + h) - 30.0 * f(x) + 16.0 * f(x - h) -
          f(x - 2 * h)) /
         (12.0 * h * h);
}

}  // namespace test_oracle
