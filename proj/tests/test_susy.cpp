#include <doctest.h>

#include <cmath>
#include <random>

#include "oracles.hpp"
#include "susyprop/quadrature.hpp"
#include "susyprop/specfun.hpp"
#include "susyprop/susy.hpp"

using namespace susyprop;

namespace {
const Complex kC{0.0, 2.0};
}

TEST_SUITE_BEGIN("susy");

TEST_CASE("oscillator transformation function") {
  const Factorization f = make_oscillator_transform(kC);
  CHECK(f.alpha == -0.5);
  CHECK(f.case_tag == CaseTag::CaseII);
  CHECK(std::abs(f.u(0.0) - kC) < 1e-15);

  // N_alpha = (2 pi)^{-1/4} sqrt(C^2 - 1); C = 2i gives i sqrt(5) under the
  // principal branch
  const Complex expected = std::pow(2.0 * M_PI, -0.25) * Complex(0.0, std::sqrt(5.0));
  CHECK(std::abs(f.n_alpha - expected) < 1e-14);

  CHECK_THROWS_AS(make_oscillator_transform({1.5, 0.0}), NearZeroError);
}

TEST_CASE("transformation functions satisfy h0 u = alpha u") {
  for (int which = 0; which < 2; ++which) {
    const Factorization f = which == 0 ? make_oscillator_transform(kC)
                                       : make_soliton_transform(1.0, 2.0);
    for (double x : {-2.2, 0.1, 1.7}) {
      // derivative closed forms against central differences
      const Complex du_fd = (f.u(x + 1e-5) - f.u(x - 1e-5)) / 2e-5;
      CHECK(std::abs(f.u_prime(x) - du_fd) < 1e-8 * std::abs(f.u(x)));
      const Complex res =
          -test_oracle::fd_laplacian4([&](double xx) { return f.u(xx); }, x, 1e-2) +
          (f.base.potential(x) - f.alpha) * f.u(x);
      CHECK(std::abs(res) < 1e-7 * std::abs(f.u(x)));
    }
  }
}

TEST_CASE("oscillator inverse-square integral identity") {
  // substitution s = erf(x/sqrt2) collapses the integral to
  // sqrt(2 pi) / (C^2 - 1)
  const Factorization f = make_oscillator_transform(kC);
  QuadratureSpec spec;
  spec.truncation_radius = 14.0;
  const Complex val = bilinear_norm([&](double x) { return 1.0 / f.u(x); }, spec);
  const Complex expected = std::sqrt(2.0 * M_PI) / (kC * kC - 1.0);
  CHECK(std::abs(val - expected) < 1e-8);
}

TEST_CASE("soliton transformation parameters") {
  const Factorization f = make_soliton_transform(1.0, 2.0);
  const auto& sp = std::get<SolitonParams>(f.params);
  // arctanh(3 / 4i) = -i arctan(3/4)
  CHECK(sp.c.real() == doctest::Approx(0.0).epsilon(1e-15));
  CHECK(sp.c.imag() == doctest::Approx(-0.6435011087932844).epsilon(1e-15));
  CHECK(f.alpha == -1.0);
  CHECK(std::abs(f.n_alpha - std::sqrt(0.5)) < 1e-15);

  CHECK_THROWS_AS(make_soliton_transform(-1.0, 2.0), std::invalid_argument);
  CHECK_THROWS_AS(make_soliton_transform(1.0, 0.0), std::invalid_argument);
  CHECK_THROWS_AS(make_soliton_transform(1.0, 1.0), std::invalid_argument);
}

TEST_CASE("partner potential closed forms") {
  const PartnerModel osc = make_oscillator_partner(kC);
  const PartnerModel sol = make_soliton_partner(1.0, 2.0);
  const auto& sp = std::get<SolitonParams>(sol.fact.params);

  // cosh(c) = cos(arctan(3/4)) = 4/5, so V_c(0) = -2 / (16/25)
  CHECK(sol.potential(0.0).real() == doctest::Approx(-3.125).epsilon(1e-13));
  CHECK(std::abs(sol.potential(0.0).imag()) < 1e-13);

  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> uni(-6.0, 6.0);
  for (int i = 0; i < 50; ++i) {
    const double x = uni(rng);
    const Complex q1 = std::sqrt(M_PI / 2.0) * (kC + std::erf(x / std::sqrt(2.0)));
    const Complex vosc = 0.25 * x * x - 1.0 + 2.0 * x * std::exp(-0.5 * x * x) / q1 +
                         2.0 * std::exp(-x * x) / (q1 * q1);
    CHECK(std::abs(osc.potential(x) - vosc) <= 1e-10 * std::max(1.0, std::abs(vosc)));
    const Complex ch = std::cosh(x + sp.c);
    CHECK(std::abs(sol.potential(x) + 2.0 / (ch * ch)) < 1e-12);
  }

  // both partners are genuinely complex
  CHECK(std::abs(osc.potential(0.7).imag()) > 1e-3);
  CHECK(std::abs(sol.potential(0.7).imag()) > 1e-3);
}

TEST_CASE("partner potential asymptotics") {
  // the oscillator partner tends to x^2/4 - 1 (the shifted well whose
  // levels n - 1/2 are exactly the partner spectrum); the correction terms
  // decay like a Gaussian
  const PartnerModel osc = make_oscillator_partner(kC);
  for (double x : {-12.0, 12.0})
    CHECK(std::abs(osc.potential(x) - Complex(0.25 * x * x - 1.0, 0.0)) < 1e-8);
  const PartnerModel sol = make_soliton_partner(1.0, 2.0);
  for (double x : {-14.0, 14.0}) CHECK(std::abs(sol.potential(x)) < 1e-8);
}

TEST_CASE("L annihilates its transformation function") {
  for (int which = 0; which < 2; ++which) {
    const Factorization f = which == 0 ? make_oscillator_transform(kC)
                                       : make_soliton_transform(1.0, 2.0);
    for (double x : {-3.0, -0.4, 1.9}) {
      CHECK(std::abs(apply_L(f, f.u(x), f.u_prime(x), x)) <
            1e-13 * (std::abs(f.u(x)) + std::abs(f.u_prime(x))));
      const Complex inv = 1.0 / f.u(x);
      const Complex dinv = -f.u_prime(x) / (f.u(x) * f.u(x));
      CHECK(std::abs(apply_Lt(f, inv, dinv, x)) < 1e-14 / std::abs(f.u(x)) + 1e-16);
    }
  }
}

TEST_CASE("L on a plane wave over the soliton background") {
  const Factorization f = make_soliton_transform(1.0, 2.0);
  const auto& sp = std::get<SolitonParams>(f.params);
  const double k = 1.3, x = 0.8;
  const Complex g = std::exp(kImagUnit * k * x);
  const Complex expected = (kImagUnit * k - std::tanh(x + sp.c)) * g;
  CHECK(std::abs(apply_L(f, g, kImagUnit * k * g, x) - expected) < 1e-14);
}

TEST_CASE("transformed eigenfunctions solve the partner problem") {
  const PartnerModel pm = make_oscillator_partner(kC);
  for (int n : {0, 2, 5}) {
    for (double x : {-1.4, 0.3, 2.2}) {
      const Complex res =
          -test_oracle::fd_laplacian4([&](double xx) { return pm.eigenfunction(n, xx); },
                                      x, 5e-3) +
          pm.potential(x) * pm.eigenfunction(n, x) -
          (n + 0.5) * pm.eigenfunction(n, x);
      CHECK(std::abs(res) < 1e-6);
    }
  }
}

TEST_CASE("bilinear orthonormality of low transformed eigenfunctions") {
  const PartnerModel pm = make_oscillator_partner(kC);
  for (int m = 0; m <= 3; ++m)
    for (int n = m; n <= 3; ++n) {
      const Integral r = integrate(
          [&](double x) {
            const auto phi = pm.eigenfunctions(3, x);
            return phi[m] * phi[n];
          },
          -16.0, 16.0, {});
      CHECK(std::abs(r.value - (m == n ? 1.0 : 0.0)) < 1e-9);
    }
  for (int n = 0; n <= 3; ++n) {
    const Integral r = integrate(
        [&](double x) { return pm.bound(x) * pm.eigenfunction(n, x); }, -16.0, 16.0, {});
    CHECK(std::abs(r.value) < 1e-9);
  }
}

TEST_CASE("intertwining on eigenfunctions: h_c (L psi_n) = E_n (L psi_n)") {
  const PartnerModel pm = make_oscillator_partner(kC);
  const Factorization& f = pm.fact;
  for (int n = 0; n <= 5; ++n) {
    auto lpsi = [&](double x) {
      return apply_L(f, osc_eigenfunction(n, x), osc_eigenfunction_deriv(n, x), x);
    };
    double prev = 0.0;
    for (double h : {2e-2, 1e-2}) {
      double worst = 0.0;
      for (double x : {-1.0, 0.4, 1.6}) {
        const Complex res = -test_oracle::fd_laplacian4(lpsi, x, h) +
                            pm.potential(x) * lpsi(x) - (n + 0.5) * lpsi(x);
        worst = std::max(worst, std::abs(res));
      }
      if (prev > 0.0) CHECK(prev / worst > 10.0);  // 4th-order contraction
      prev = worst;
    }
  }
}

TEST_CASE("added bound state") {
  const PartnerModel osc = make_oscillator_partner(kC);
  // phi_alpha(0) = N_alpha / C = (2 pi)^{-1/4} sqrt(5) / 2
  CHECK(std::abs(osc.bound(0.0) -
                 Complex(std::pow(2.0 * M_PI, -0.25) * std::sqrt(5.0) / 2.0, 0.0)) <
        1e-14);

  CHECK(std::abs(bilinear_norm([&](double x) { return osc.bound(x); }) - 1.0) < 1e-8);

  const PartnerModel sol = make_soliton_partner(1.0, 2.0);
  QuadratureSpec spec;
  spec.truncation_radius = 30.0;
  spec.abs_tol = 1e-12;
  spec.rel_tol = 1e-12;
  CHECK(std::abs(bilinear_norm([&](double x) { return sol.bound(x); }, spec) - 1.0) <
        1e-10);

  // eigenrelation h_c phi_alpha = alpha phi_alpha
  for (int which = 0; which < 2; ++which) {
    const PartnerModel& pm = which == 0 ? osc : sol;
    for (double x : {-1.2, 0.5}) {
      const Complex res =
          -test_oracle::fd_laplacian4([&](double xx) { return pm.bound(xx); }, x, 1e-2) +
          pm.potential(x) * pm.bound(x) - pm.fact.alpha * pm.bound(x);
      CHECK(std::abs(res) < 1e-7);
    }
  }

  // an isospectral (case I) transformation has no added level
  Factorization flipped = osc.fact;
  flipped.case_tag = CaseTag::CaseI;
  CHECK_THROWS_AS(bound_state(flipped, 0.0), NoBoundStateError);
}

TEST_CASE("bilinear pairing is not sesquilinear") {
  CHECK(std::abs(bilinear_norm([](double x) {
          return Complex(osc_eigenfunction(0, x), 0.0);
        }) - 1.0) < 1e-10);
  // multiplying by i flips the sign of the bilinear square
  CHECK(std::abs(bilinear_norm([](double x) {
          return kImagUnit * osc_eigenfunction(0, x);
        }) + 1.0) < 1e-10);
}

TEST_CASE("bilinear norm rejects integrands that have not decayed") {
  CHECK_THROWS_AS(bilinear_norm([](double x) { return Complex(1.0 / (1.0 + x * x), 0.0); }),
                  Error);
}

TEST_SUITE_END();
