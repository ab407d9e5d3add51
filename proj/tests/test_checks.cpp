#include <doctest.h>

#include "susyprop/checks.hpp"

using namespace susyprop;

TEST_SUITE_BEGIN("checks");

TEST_CASE("registry lists the acceptance criteria first") {
  const auto names = check_names();
  REQUIRE(names.size() > 20);
  CHECK(names.front().rfind("acc01", 0) == 0);
  int acc = 0;
  for (const auto& n : names)
    if (n.rfind("acc", 0) == 0) ++acc;
  CHECK(acc == 14);  // 12 criteria, two of them reported as a/b pairs
}

TEST_CASE("fast property checks pass") {
  CheckOptions opts;
  opts.threads = 0;
  for (const char* name :
       {"quadrature_reference_integrals", "specfun_cerf_odd", "specfun_cerf_vs_series",
        "specfun_faddeeva_vs_cf", "specfun_hermite_recurrence_vs_direct",
        "model_free_group_property", "model_green_derivative_jump",
        "model_green_spectral_consistency", "model_kernel_symmetry",
        "susy_annihilation", "susy_closed_form_potentials",
        "susy_norm_quadrature_identity", "kernel_symmetry_closed",
        "acc08_wronskian_constancy"}) {
    const auto results = run_checks(name, opts);
    REQUIRE(results.size() == 1);
    INFO(results[0].name, " metric=", results[0].metric, " tol=", results[0].tolerance);
    CHECK(results[0].pass);
  }
}

TEST_CASE("filtering matches by substring") {
  const auto results = run_checks("wronskian", {});
  REQUIRE(results.size() == 1);
  CHECK(results[0].name == "acc08_wronskian_constancy");
  CHECK(run_checks("no_such_check", {}).empty());
}

TEST_CASE("tolerance override below discretization error fails the check") {
  CheckOptions opts;
  opts.tolerance_overrides["acc08_wronskian_constancy"] = 1e-18;
  const auto results = run_checks("acc08", opts);
  REQUIRE(results.size() == 1);
  CHECK(!results[0].pass);
  CHECK(results[0].tolerance == 1e-18);
}

TEST_SUITE_END();
