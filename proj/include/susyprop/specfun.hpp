#pragma once

#include <vector>

#include "susyprop/types.hpp"

namespace susyprop {

// Faddeeva function w(z) = exp(-z^2) erfc(-iz).
//
// Evaluated by a Weideman-type rational expansion on the closed upper
// half-plane and by the reflection w(z) = 2 exp(-z^2) - w(-z) below it.
// Relative accuracy is ~1e-13 for |z| <= 30.  Throws RangeError where the
// reflection term exp(-z^2) overflows (|z| large with Im z strongly
// negative).
Complex faddeeva_w(Complex z);

// Error function of a complex argument, entire and odd.
// erf(z) = 1 - exp(-z^2) w(iz) away from the origin; a non-alternating
// power series near it.  Real arguments are delegated to std::erf.
Complex cerf(Complex z);

// Normalized eigenfunctions psi_n of h0 = -d^2/dx^2 + x^2/4, with
// h0 psi_n = (n + 1/2) psi_n.  Evaluated by the weighted three-term
// recurrence on Hermite functions of argument x/sqrt(2), so the Gaussian
// factor is carried along and no overflow occurs at any n, x.
double osc_eigenfunction(int n, double x);

// Analytic derivative psi_n'(x) = -(x/2) psi_n(x) + sqrt(n) psi_{n-1}(x).
double osc_eigenfunction_deriv(int n, double x);

// psi_0(x) .. psi_n_max(x) in one recurrence sweep.
std::vector<double> osc_eigenfunctions(int n_max, double x);

}  // namespace susyprop
