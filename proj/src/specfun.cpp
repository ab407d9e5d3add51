#include "susyprop/specfun.hpp"

#include <array>
#include <cmath>
#include <stdexcept>

namespace susyprop {

namespace {

constexpr double kSqrtPi = 1.7724538509055160273;
constexpr double kInvSqrtPi = 1.0 / kSqrtPi;

// Weideman's rational expansion of w on the upper half-plane: with
// Z = (L + iz)/(L - iz),
//   w(z) ~= 2 p(Z) / (L - iz)^2 + (1/sqrt(pi)) / (L - iz),
// p a degree-(N-1) polynomial whose coefficients are the Fourier cosine
// coefficients of exp(-t^2) (L^2 + t^2) under t = L tan(theta/2).
// N = 48 keeps the uniform relative error near 1e-14.
constexpr int kWeidemanTerms = 48;

struct WeidemanTable {
  double L;
  std::array<double, kWeidemanTerms> coeff;  // coeff[j-1] multiplies Z^{j-1}

  WeidemanTable() {
    const int m = 2 * kWeidemanTerms;
    L = std::sqrt(kWeidemanTerms / std::sqrt(2.0));
    for (int j = 1; j <= kWeidemanTerms; ++j) {
      double s = 0.0;
      for (int k = 1; k < m; ++k) {
        const double theta = k * M_PI / m;
        const double t = L * std::tan(0.5 * theta);
        s += std::exp(-t * t) * (L * L + t * t) * std::cos(j * theta);
      }
      coeff[j - 1] = (L * L + 2.0 * s) / (2.0 * m);
    }
  }
};

const WeidemanTable& weideman() {
  static const WeidemanTable table;
  return table;
}

// Requires Im z >= 0.
Complex w_upper(Complex z) {
  const WeidemanTable& t = weideman();
  const Complex iz(-z.imag(), z.real());
  const Complex denom = t.L - iz;
  const Complex big_z = (t.L + iz) / denom;
  Complex p{0.0, 0.0};
  for (int j = kWeidemanTerms - 1; j >= 0; --j) p = p * big_z + t.coeff[j];
  return 2.0 * p / (denom * denom) + kInvSqrtPi / denom;
}

// Non-alternating small-|z| series
//   erf(z) = (2/sqrt(pi)) z exp(-z^2) sum_k (2 z^2)^k / (2k+1)!!
// (every term has the same sign for real z, so no cancellation).
Complex cerf_series(Complex z) {
  const Complex z2 = z * z;
  Complex term{1.0, 0.0};
  Complex sum = term;
  for (int k = 1; k < 64; ++k) {
    term *= 2.0 * z2 / static_cast<double>(2 * k + 1);
    sum += term;
    if (std::abs(term) < 1e-18 * std::abs(sum)) break;
  }
  return 2.0 * kInvSqrtPi * z * std::exp(-z2) * sum;
}

bool is_finite(Complex z) {
  return std::isfinite(z.real()) && std::isfinite(z.imag());
}

}  // namespace

Complex faddeeva_w(Complex z) {
  if (!is_finite(z)) throw std::invalid_argument("faddeeva_w: non-finite argument");
  if (z.imag() >= 0.0) return w_upper(z);
  // w(z) + w(-z) = 2 exp(-z^2); the exponential dominates below the axis.
  const double growth = z.imag() * z.imag() - z.real() * z.real();
  if (growth > 700.0)
    throw RangeError("faddeeva_w: exp(-z^2) overflows for this argument");
  return 2.0 * std::exp(-z * z) - w_upper(-z);
}

Complex cerf(Complex z) {
  if (!is_finite(z)) throw std::invalid_argument("cerf: non-finite argument");
  if (z.imag() == 0.0) return {std::erf(z.real()), 0.0};
  // Odd reflection keeps cerf(-z) == -cerf(z) exact.
  if (z.real() < 0.0 || (z.real() == 0.0 && z.imag() < 0.0)) return -cerf(-z);
  if (std::norm(z) <= 4.0) return cerf_series(z);
  // Im(iz) = Re z >= 0, so the upper-half-plane expansion applies directly.
  const double growth = z.imag() * z.imag() - z.real() * z.real();
  if (growth > 700.0)
    throw RangeError("cerf: exp(-z^2) overflows for this argument");
  const Complex iz(-z.imag(), z.real());
  return 1.0 - std::exp(-z * z) * w_upper(iz);
}

namespace {

constexpr double kSqrt2 = 1.4142135623730950488;

// Hermite functions of argument q with weight exp(-q^2/2), normalized on
// dq; psi_n(x) = 2^{-1/4} * hermite_fn(n, x/sqrt(2)).
void hermite_functions(int n_max, double q, double* out) {
  out[0] = std::pow(M_PI, -0.25) * std::exp(-0.5 * q * q);
  if (n_max >= 1) out[1] = kSqrt2 * q * out[0];
  for (int n = 2; n <= n_max; ++n)
    out[n] = std::sqrt(2.0 / n) * q * out[n - 1] -
             std::sqrt((n - 1.0) / n) * out[n - 2];
}

}  // namespace

double osc_eigenfunction(int n, double x) {
  if (n < 0) throw std::invalid_argument("osc_eigenfunction: n must be >= 0");
  std::vector<double> buf(n + 1);
  hermite_functions(n, x / kSqrt2, buf.data());
  return std::pow(2.0, -0.25) * buf[n];
}

double osc_eigenfunction_deriv(int n, double x) {
  if (n < 0) throw std::invalid_argument("osc_eigenfunction_deriv: n must be >= 0");
  if (n == 0) return -0.5 * x * osc_eigenfunction(0, x);
  std::vector<double> buf(n + 1);
  hermite_functions(n, x / kSqrt2, buf.data());
  const double scale = std::pow(2.0, -0.25);
  return -0.5 * x * scale * buf[n] + std::sqrt(static_cast<double>(n)) * scale * buf[n - 1];
}

std::vector<double> osc_eigenfunctions(int n_max, double x) {
  if (n_max < 0) throw std::invalid_argument("osc_eigenfunctions: n_max must be >= 0");
  std::vector<double> buf(n_max + 1);
  hermite_functions(n_max, x / kSqrt2, buf.data());
  const double scale = std::pow(2.0, -0.25);
  for (double& v : buf) v *= scale;
  return buf;
}

}  // namespace susyprop
