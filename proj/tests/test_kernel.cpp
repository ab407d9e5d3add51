#include <doctest.h>

#include <cmath>
#include <random>

#include "oracles.hpp"
#include "susyprop/kernel.hpp"
#include "susyprop/model.hpp"
#include "susyprop/quadrature.hpp"
#include "susyprop/specfun.hpp"
#include "susyprop/susy.hpp"

using namespace susyprop;

namespace {
const Complex kC{0.0, 2.0};

std::vector<Complex> sample_fn(const Grid1D& g, const std::function<Complex(double)>& f) {
  std::vector<Complex> v(g.size());
  for (int j = 0; j < g.size(); ++j) v[j] = f(g.point(j));
  return v;
}
}  // namespace

TEST_SUITE_BEGIN("kernel");

TEST_CASE("soliton closed form against the transformation theorem") {
  const PartnerModel pm = make_soliton_partner(1.0, 2.0);
  const auto& sp = std::get<SolitonParams>(pm.fact.params);
  const Complex closed = soliton_kernel_closed(1.0, sp.c, 0.5, -0.5, 1.0).value;
  const Complex theorem = theorem_kernel(pm, 0.5, -0.5, 1.0).value;
  CHECK(std::abs(closed - theorem) < 1e-6);
  CHECK_THROWS_AS(soliton_kernel_closed(1.0, sp.c, 0.0, 0.0, 0.0), SingularTimeError);
}

TEST_CASE("soliton kernel reduces to the free kernel as a -> 0") {
  const PartnerModel pm = make_soliton_partner(1.0, 2.0);
  const auto& sp = std::get<SolitonParams>(pm.fact.params);
  const double a = 1e-6;
  for (auto [x, y] : std::vector<std::pair<double, double>>{{0.4, -1.0}, {2.0, 1.1}}) {
    const Complex kc = soliton_kernel_closed(a, sp.c, x, y, 0.8).value;
    const Complex k0 = free_propagator(x, y, 0.8);
    CHECK(std::abs(kc - k0) < 1e-5);
  }
}

TEST_CASE("soliton kernel is symmetric under x <-> y") {
  const PartnerModel pm = make_soliton_partner(1.0, 2.0);
  const auto& sp = std::get<SolitonParams>(pm.fact.params);
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> uni(-4.0, 4.0);
  for (int i = 0; i < 20; ++i) {
    const double x = uni(rng), y = uni(rng), t = 0.2 + 0.1 * i;
    CHECK(std::abs(soliton_kernel_closed(1.0, sp.c, x, y, t).value -
                   soliton_kernel_closed(1.0, sp.c, y, x, t).value) < 1e-12);
  }
}

TEST_CASE("oscillator closed form against the transformation theorem") {
  const Complex closed = oscillator_kernel_closed(kC, 0.4, -0.8, 0.7).value;
  const PartnerModel pm = make_oscillator_partner(kC);
  const Complex theorem = theorem_kernel(pm, 0.4, -0.8, 0.7).value;
  CHECK(std::abs(closed - theorem) < 1e-6);
}

TEST_CASE("oscillator kernels enforce the branch cell 0 < t < pi") {
  const PartnerModel pm = make_oscillator_partner(kC);
  CHECK_THROWS_AS(theorem_kernel(pm, 0.0, 0.0, 3.5), SingularTimeError);
  CHECK_THROWS_AS(theorem_kernel(pm, 0.0, 0.0, -0.2), SingularTimeError);
  CHECK_THROWS_AS(oscillator_kernel_closed(kC, 0.0, 0.0, 3.5), SingularTimeError);
}

TEST_CASE("theorem kernel evolves the added bound state by its phase") {
  // e^{-i alpha t} with alpha = -1/2 gives e^{+it/2}
  const PartnerModel pm = make_oscillator_partner(kC);
  const Grid1D grid(-16.0, 16.0, 641);
  const auto phi_a = sample_fn(grid, [&](double y) { return pm.bound(y); });
  const double t = 0.7, x = 0.6;
  Complex acc{0.0, 0.0};
  for (int j = 0; j < grid.size(); ++j) {
    const double wgt = (j == 0 || j == grid.size() - 1) ? 0.5 : 1.0;
    acc += wgt * oscillator_kernel_closed(kC, x, grid.point(j), t).value * phi_a[j];
  }
  acc *= grid.spacing();
  const Complex expected = std::exp(kImagUnit * 0.5 * t) * pm.bound(x);
  CHECK(std::abs(acc - expected) < 1e-6);
}

TEST_CASE("split-point prefactor differentiation matches a finite difference") {
  // d/dy of the assembled z-integral must equal the analytic form that
  // keeps only the f_l'(y), f_r'(y) terms: the two boundary contributions
  // of the moving split point cancel because the resolvent kernel is
  // continuous at z = y
  const PartnerModel pm = make_soliton_partner(1.0, 2.0);
  const JostPair jp = pm.fact.base.jost(pm.fact.alpha);
  const double x = 0.3, t = 0.8, y0 = -0.4;
  QuadratureSpec spec;
  spec.abs_tol = 1e-12;
  spec.rel_tol = 1e-12;
  auto weighted = [&](double z) { return free_propagator(x, z, t); };
  auto assembled = [&](double y) {
    const Complex left =
        integrate_or_throw([&](double z) { return weighted(z) * jp.f_l(z); }, -30.0, y, spec);
    const Complex right =
        integrate_or_throw([&](double z) { return weighted(z) * jp.f_r(z); }, y, 30.0, spec);
    return (jp.f_r(y) * left + jp.f_l(y) * right) / jp.resolvent_denominator();
  };
  const double delta = 1e-4;
  const Complex fd = (assembled(y0 + delta) - assembled(y0 - delta)) / (2.0 * delta);
  const Complex left =
      integrate_or_throw([&](double z) { return weighted(z) * jp.f_l(z); }, -30.0, y0, spec);
  const Complex right =
      integrate_or_throw([&](double z) { return weighted(z) * jp.f_r(z); }, y0, 30.0, spec);
  const Complex analytic =
      (jp.f_r_prime(y0) * left + jp.f_l_prime(y0) * right) / jp.resolvent_denominator();
  CHECK(std::abs(fd - analytic) < 1e-6);
}

TEST_CASE("spectral kernel propagates a single eigenfunction exactly") {
  const PartnerModel pm = make_oscillator_partner(kC);
  const Grid1D grid(-14.0, 14.0, 561);
  const auto phi3 = sample_fn(grid, [&](double y) { return pm.eigenfunction(3, y); });
  const double t = 0.9;
  const auto evolved =
      propagate_state(KernelMethod::SpectralSum, pm, grid, phi3, t, {}, 8, 0);
  const Complex phase = std::exp(-kImagUnit * 3.5 * t);
  double worst = 0.0;
  for (int j = 0; j < grid.size(); ++j)
    worst = std::max(worst, std::abs(evolved[j] - phase * phi3[j]));
  CHECK(worst < 1e-8);
}

TEST_CASE("spectral kernel needs a discrete base spectrum") {
  const PartnerModel sol = make_soliton_partner(1.0, 2.0);
  CHECK_THROWS_AS(spectral_kernel(sol, 16, 0.0, 0.0, 0.5), Error);
}

TEST_CASE("spectral kernel reports its truncation scale") {
  const PartnerModel pm = make_oscillator_partner(kC);
  const KernelEval k = spectral_kernel(pm, 16, 0.3, -0.2, 0.5);
  CHECK(k.method == KernelMethod::SpectralSum);
  CHECK(k.err_estimate > 1e-8);  // first omitted term is not small pointwise
}

TEST_CASE("propagate_state rejects states touching the grid edge") {
  const PartnerModel pm = make_oscillator_partner(kC);
  const Grid1D grid(-15.0, 15.0, 601);
  const auto packet = sample_fn(grid, [](double y) {
    const double xs = y - 13.0;  // centered too close to the edge
    return Complex(std::pow(M_PI, -0.25) * std::exp(-0.5 * xs * xs), 0.0);
  });
  CHECK_THROWS_AS(
      propagate_state(KernelMethod::SpectralSum, pm, grid, packet, 0.5, {}, 32, 0),
      DomainTooSmallError);
}

TEST_CASE("theorem kernel error estimates cover the observed error") {
  const PartnerModel pm = make_soliton_partner(1.0, 2.0);
  const auto& sp = std::get<SolitonParams>(pm.fact.params);
  for (auto [x, y] : std::vector<std::pair<double, double>>{{0.0, 0.0}, {1.5, -2.0}}) {
    const KernelEval kt = theorem_kernel(pm, x, y, 0.6);
    const Complex exact = soliton_kernel_closed(1.0, sp.c, x, y, 0.6).value;
    CHECK(std::abs(kt.value - exact) <= std::max(kt.err_estimate * 50.0, 1e-9));
    CHECK(kt.method == KernelMethod::TheoremQuad);
  }
}

TEST_CASE("method dispatch tags") {
  const PartnerModel sol = make_soliton_partner(1.0, 2.0);
  CHECK(closed_kernel(sol, 0.1, 0.2, 0.5).method == KernelMethod::ClosedForm);
  const PartnerModel osc = make_oscillator_partner(kC);
  CHECK(closed_kernel(osc, 0.1, 0.2, 0.5).method == KernelMethod::ClosedForm);
  CHECK(std::string(kernel_method_name(KernelMethod::OracleCN)) == "cn");
}

TEST_SUITE_END();
