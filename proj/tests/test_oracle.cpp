#include <doctest.h>

#include <cmath>

#include "oracles.hpp"
#include "susyprop/oracle.hpp"
#include "susyprop/quadrature.hpp"
#include "susyprop/specfun.hpp"
#include "susyprop/susy.hpp"

using namespace susyprop;

namespace {
std::vector<Complex> sample_fn(const Grid1D& g, const std::function<Complex(double)>& f) {
  std::vector<Complex> v(g.size());
  for (int j = 0; j < g.size(); ++j) v[j] = f(g.point(j));
  return v;
}
}  // namespace

TEST_SUITE_BEGIN("oracle");

TEST_CASE("grid Hamiltonian on a plane wave") {
  const Grid1D grid(-10.0, 10.0, 2001);
  const double k = 1.0;
  std::vector<Complex> v(grid.size(), Complex{0.0, 0.0});
  const auto g = sample_fn(grid, [&](double x) { return std::exp(kImagUnit * k * x); });
  for (int order : {2, 4}) {
    const auto hg = apply_h_grid(v, g, grid.spacing(), order);
    double worst = 0.0;
    for (int j = 4; j + 4 < grid.size(); ++j)
      worst = std::max(worst, std::abs(hg[j] - k * k * g[j]));
    CHECK(worst < (order == 2 ? 1e-5 : 1e-9));
  }
  CHECK_THROWS_AS(apply_h_grid(v, std::vector<Complex>(5), grid.spacing(), 2),
                  GridMismatchError);
  CHECK_THROWS_AS(apply_h_grid(v, g, grid.spacing(), 3), std::invalid_argument);
}

TEST_CASE("grid Hamiltonian eigenrelations") {
  const Grid1D grid(-12.0, 12.0, 2401);
  // oscillator ground state
  {
    const auto v = sample_fn(grid, [](double x) { return Complex(0.25 * x * x, 0.0); });
    const auto psi = sample_fn(grid, [](double x) {
      return Complex(osc_eigenfunction(0, x), 0.0);
    });
    const auto hpsi = apply_h_grid(v, psi, grid.spacing(), 4);
    double worst = 0.0;
    for (int j = 2; j + 2 < grid.size(); ++j)
      worst = std::max(worst, std::abs(hpsi[j] - 0.5 * psi[j]));
    CHECK(worst < 1e-9);
  }
  // soliton bound state under the complex partner potential
  {
    const PartnerModel pm = make_soliton_partner(1.0, 2.0);
    const auto v = sample_fn(grid, [&](double x) { return pm.potential(x); });
    const auto phi = sample_fn(grid, [&](double x) { return pm.bound(x); });
    const auto hphi = apply_h_grid(v, phi, grid.spacing(), 4);
    double worst = 0.0;
    for (int j = 2; j + 2 < grid.size(); ++j)
      worst = std::max(worst, std::abs(hphi[j] - (-1.0) * phi[j]));
    CHECK(worst < 5e-7);  // h^4 floor of the stencil at this spacing
  }
}

TEST_CASE("step count divides the target time exactly") {
  const Grid1D grid(-5.0, 5.0, 11);
  const EvolutionConfig a = make_evolution_config(grid, 0.7, 1e-3);
  CHECK(a.n_steps == 700);
  CHECK(a.n_steps * a.dt == doctest::Approx(0.7).epsilon(1e-15));
  const EvolutionConfig b = make_evolution_config(grid, 1.0, 3e-4);
  CHECK(b.n_steps == 3334);
  CHECK(b.dt <= 3e-4);
  CHECK(b.n_steps * b.dt == doctest::Approx(1.0).epsilon(1e-15));
}

TEST_CASE("CN conserves the norm for a real potential") {
  const Grid1D grid(-20.0, 20.0, 1201);
  const auto v = sample_fn(grid, [](double x) { return Complex(0.25 * x * x, 0.0); });
  const auto phi0 = sample_fn(grid, [](double x) {
    const double xs = x - 0.5;
    return std::pow(M_PI, -0.25) * std::exp(Complex(-0.5 * xs * xs, 0.4 * xs));
  });
  EvolutionConfig cfg{grid, 1e-3, 200, 1e-6};
  const auto phi = cn_evolve(v, phi0, cfg);
  const double n0 = sampled_norm(std::span<const Complex>(phi0), grid.spacing());
  const double n1 = sampled_norm(std::span<const Complex>(phi), grid.spacing());
  CHECK(std::abs(n1 - n0) / n0 < 1e-12);
}

TEST_CASE("CN free packet against the exact spreading formula") {
  const Grid1D grid(-25.0, 25.0, 2001);
  std::vector<Complex> v(grid.size(), Complex{0.0, 0.0});
  const auto phi0 =
      sample_fn(grid, [](double x) { return test_oracle::free_gaussian(0.0, 1.0, 0.5, x, 0.0); });
  const double t = 0.5;
  const auto phi = cn_evolve(v, phi0, make_evolution_config(grid, t, 5e-4));
  double num = 0.0, den = 0.0;
  for (int j = 0; j < grid.size(); ++j) {
    const Complex exact = test_oracle::free_gaussian(0.0, 1.0, 0.5, grid.point(j), t);
    num += std::norm(phi[j] - exact);
    den += std::norm(exact);
  }
  // coarse-grid sanity; the reference-resolution run lives in the checks
  CHECK(std::sqrt(num / den) < 3e-4);
}

TEST_CASE("CN is second order in time") {
  // near-spectral spatial resolution isolates the dt^2 eigenphase error
  const Grid1D grid(-40.0, 40.0, 16385);
  std::vector<Complex> v(grid.size()), psi0(grid.size());
  for (int j = 0; j < grid.size(); ++j) {
    v[j] = 0.25 * grid.point(j) * grid.point(j);
    psi0[j] = osc_eigenfunction(0, grid.point(j));
  }
  const double t = 1.0;
  auto phase_error = [&](double dt) {
    EvolutionConfig cfg{grid, dt, static_cast<int>(std::lround(t / dt)), 1e-6};
    const auto phi = cn_evolve(v, psi0, cfg);
    Complex overlap{0.0, 0.0};
    double den = 0.0;
    for (int j = 0; j < grid.size(); ++j) {
      overlap += std::conj(psi0[j]) * phi[j];
      den += std::norm(psi0[j]);
    }
    return std::abs(std::arg(overlap / den) + 0.5 * t);
  };
  const double coarse = phase_error(0.05);
  const double fine = phase_error(0.025);
  CHECK(coarse / fine == doctest::Approx(4.0).epsilon(0.25));
}

TEST_CASE("CN flags a domain that is too small") {
  const Grid1D grid(-4.0, 4.0, 201);
  std::vector<Complex> v(grid.size(), Complex{0.0, 0.0});
  const auto phi0 =
      sample_fn(grid, [](double x) { return test_oracle::free_gaussian(0.0, 1.0, 2.0, x, 0.0); });
  // fast packet hits the right wall well before t = 2
  EvolutionConfig cfg{grid, 1e-3, 2000, 1e-6};
  CHECK_THROWS_AS(cn_evolve(v, phi0, cfg), DomainTooSmallError);
}

TEST_CASE("Numerov grid spectrum of the plain oscillator") {
  const Grid1D grid(-10.0, 10.0, 400);
  const auto v = sample_fn(grid, [](double x) { return Complex(0.25 * x * x, 0.0); });
  const auto evals = grid_spectrum(v, grid.spacing(), 5);
  for (int k = 0; k < 5; ++k) {
    CHECK(std::abs(evals[k].real() - (k + 0.5)) < 1e-5);
    CHECK(std::abs(evals[k].imag()) < 1e-10);
  }
}

TEST_SUITE_END();
