#include <doctest.h>

#include <cmath>

#include "susyprop/quadrature.hpp"
#include "susyprop/types.hpp"

using namespace susyprop;

TEST_SUITE_BEGIN("quadrature");

TEST_CASE("grid invariants") {
  const Grid1D g(-2.0, 3.0, 11);
  CHECK(g.spacing() == doctest::Approx(0.5).epsilon(1e-15));
  CHECK(g.point(0) == -2.0);
  CHECK(g.point(10) == doctest::Approx(3.0).epsilon(1e-15));
  CHECK(g.points().size() == 11);
  CHECK_THROWS_AS(Grid1D(1.0, 1.0, 5), Error);
  CHECK_THROWS_AS(Grid1D(0.0, 1.0, 2), Error);
}

TEST_CASE("polynomial integrates exactly") {
  const Integral r = integrate([](double x) { return Complex(x * x, 0.0); }, 0.0, 1.0, {});
  CHECK(r.converged);
  CHECK(r.value.real() == doctest::Approx(1.0 / 3.0).epsilon(1e-15));
}

TEST_CASE("gaussian integral") {
  const Integral r =
      integrate([](double x) { return Complex(std::exp(-x * x), 0.0); }, -10.0, 10.0, {});
  CHECK(r.converged);
  CHECK(std::abs(r.value.real() - std::sqrt(M_PI)) < 1e-13);
}

TEST_CASE("damped oscillation against its antiderivative") {
  const Complex expo{-1.0, 50.0};
  const Complex exact = (std::exp(expo * 20.0) - 1.0) / expo;
  const Integral r = integrate([&](double x) { return std::exp(expo * x); }, 0.0, 20.0, {});
  CHECK(r.converged);
  CHECK(std::abs(r.value - exact) < 1e-12);
}

TEST_CASE("subdivision budget is honored") {
  QuadratureSpec tiny;
  tiny.max_subdivisions = 3;
  tiny.abs_tol = 1e-14;
  tiny.rel_tol = 1e-14;
  const Integral r =
      integrate([](double x) { return Complex(std::cos(200.0 * x), 0.0); }, 0.0, 7.0, tiny);
  CHECK(!r.converged);
  CHECK(r.error > 0.0);
}

TEST_CASE("trapezoid over decaying samples is superalgebraically accurate") {
  const Grid1D g(-10.0, 10.0, 401);
  std::vector<Complex> f(g.size());
  for (int j = 0; j < g.size(); ++j)
    f[j] = Complex(std::exp(-g.point(j) * g.point(j)), 0.0);
  const Complex v = sampled_integral(f, g.spacing());
  CHECK(std::abs(v.real() - std::sqrt(M_PI)) < 1e-13);
}

TEST_SUITE_END();
