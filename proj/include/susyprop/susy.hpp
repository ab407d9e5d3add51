#pragma once

#include <functional>
#include <variant>
#include <vector>

#include "susyprop/model.hpp"
#include "susyprop/quadrature.hpp"
#include "susyprop/types.hpp"

namespace susyprop {

// Case I: complex factorization constant, isospectral partner.
// Case II: real factorization constant below the base spectrum, one added
// bound state at E = alpha.
enum class CaseTag { CaseI, CaseII };

struct OscillatorParams {
  Complex C;  // u(x) = exp(x^2/4) (C + erf(x/sqrt(2))), Im C != 0
};

struct SolitonParams {
  double a;   // u(x) = cosh(a x + c), alpha = -a^2
  double b;
  Complex c;  // arctanh((b^2 - a^2) / 2iab), principal branch
};

// A first-order Darboux transformation of a base problem: the solution u of
// h0 u = alpha u that generates L = -u'/u + d/dx and the partner potential.
// Built only through the factory functions below; immutable afterwards.
struct Factorization {
  BaseProblem base;
  double alpha;
  CaseTag case_tag;
  Complex n_alpha;  // bound-state normalization (case II)
  std::variant<OscillatorParams, SolitonParams> params;
  double near_zero_floor;  // guard threshold for |u|/envelope

  Complex u(double x) const;
  Complex u_prime(double x) const;
  Complex u_second(double x) const;

  // u'(x)/u(x); throws NearZeroError if u is anomalously small there.
  Complex log_derivative(double x) const;

  // Growth envelope |u| is measured against (exp(x^2/4) resp. cosh-scale);
  // the bounded remaining factor is what must stay away from zero.
  double envelope(double x) const;
};

// u = exp(x^2/4) (C + erf(x/sqrt(2))), alpha = -1/2,
// N_alpha = (2 pi)^{-1/4} sqrt(C^2 - 1) (principal branch).
// Im C = 0 would allow a real zero of u and is rejected.
Factorization make_oscillator_transform(Complex C);

// u = cosh(a x + c), alpha = -a^2, c = arctanh((b^2 - a^2) / 2iab),
// N_alpha = sqrt(a/2).  Requires a > 0, b real, b != 0, |b| != a.
Factorization make_soliton_transform(double a, double b);

// V_c(x) = V0(x) - 2 (u''/u - (u'/u)^2), complex for both shipped examples.
Complex partner_potential(const Factorization& f, double x);

// (L g)(x) = -(u'/u) g + g'; caller supplies analytic g, g'.
Complex apply_L(const Factorization& f, Complex g, Complex g_prime, double x);

// (L^t g)(x) = -(u'/u) g - g'.
Complex apply_Lt(const Factorization& f, Complex g, Complex g_prime, double x);

// phi_n = (E_n - alpha)^{-1/2} L psi_n for the oscillator base; the
// normalization is real positive here since E_n - alpha = n + 1 > 0.
Complex transformed_eigenfunction(const Factorization& f, int n, double x);

// phi_alpha = N_alpha / u, the added case-II bound state.
Complex bound_state(const Factorization& f, double x);

// Bilinear (non-conjugated) norm integral of g^2 over the real line,
// truncated at spec.truncation_radius (default 16) after checking that the
// integrand has decayed there.
Complex bilinear_norm(const std::function<Complex(double)>& g,
                      QuadratureSpec spec = {});

// Convenience wrapper pairing the factorization with partner-side fields.
struct PartnerModel {
  Factorization fact;

  BaseKind base_kind() const { return fact.base.kind(); }
  Complex potential(double x) const { return partner_potential(fact, x); }
  Complex bound(double x) const { return bound_state(fact, x); }
  Complex eigenfunction(int n, double x) const {
    return transformed_eigenfunction(fact, n, x);
  }
  // phi_0(x) .. phi_{n_max}(x) sharing one base-eigenfunction sweep.
  std::vector<Complex> eigenfunctions(int n_max, double x) const;
};

PartnerModel make_oscillator_partner(Complex C);
PartnerModel make_soliton_partner(double a, double b);

}  // namespace susyprop
