#pragma once

#include <span>
#include <vector>

#include "susyprop/quadrature.hpp"
#include "susyprop/susy.hpp"
#include "susyprop/types.hpp"

namespace susyprop {

enum class KernelMethod { TheoremQuad, ClosedForm, SpectralSum, OracleCN };

const char* kernel_method_name(KernelMethod m);

struct KernelEval {
  Complex value{0.0, 0.0};
  double err_estimate = 0.0;
  KernelMethod method = KernelMethod::TheoremQuad;
};

// The transformed propagator
//   K_L(x,y,t) = L_x L_y \int K0(x,z,t) G0(z,y,alpha) dz,
// evaluated by splitting the z-integral at z = y (where the resolvent
// kernel switches between f_l and f_r), applying L_y analytically to the
// f_{l,r}(y) prefactors -- the boundary terms of the moving split point
// cancel because G0 is continuous there -- and applying L_x through the
// closed-form x-derivative of K0 under the integral sign.
struct TheoremParts {
  Complex transformed;  // K_L
  Complex bound_term;   // phi_alpha(x) phi_alpha(y) e^{-i alpha t} (case II)
  double err_estimate;
  Complex total() const { return transformed + bound_term; }
};

TheoremParts theorem_kernel_parts(const PartnerModel& pm, double x, double y,
                                  double t, QuadratureSpec quad = {});

// K_c = K_L (+ bound-state term in case II).
KernelEval theorem_kernel(const PartnerModel& pm, double x, double y, double t,
                          QuadratureSpec quad = {});

// Closed form for the complex one-soliton partner of the free particle:
//   K_c = K0(x,y,t)
//       + (a e^{i a^2 t} / 4 u(x) u(y)) [erf(s + d) + erf(s - d)],
//   s = a sqrt(it), d = (x-y)/(2 sqrt(it)), u = cosh(a x + c).
KernelEval soliton_kernel_closed(double a, Complex c, double x, double y, double t);

// Closed-ish form for the complex oscillator partner: the pair of
// semi-infinite z-integrals with weights exp(z^2/4) (1 ± erf(z/sqrt(2)))
// and coefficients ∓(C ± 1), divided by the Wronskian normalization
// sqrt(2 pi), plus the bound-state term; L_x again via the analytic
// x-derivative of K0.  Valid on 0 < t < pi.
KernelEval oscillator_kernel_closed(Complex C, double x, double y, double t,
                                    QuadratureSpec quad = {});

// Dispatches to the closed form matching the partner model.
KernelEval closed_kernel(const PartnerModel& pm, double x, double y, double t,
                         QuadratureSpec quad = {});

// Truncated eigenfunction sum
//   K_c ~= sum_{n<n_terms} phi_n(x) phi_n(y) e^{-i E_n t} + bound term.
// The sum converges only distributionally in (x,y) for real t, so
// err_estimate carries the size of the first omitted term and callers
// should pair the result with localized states rather than read it
// pointwise.  Oscillator base only.
KernelEval spectral_kernel(const PartnerModel& pm, int n_terms, double x,
                           double y, double t);

// Evolves a sampled state: Phi(x,t) = \int K_c(x,y,t) phi0(y) dy, the
// y-integral by composite quadrature over the grid samples.  phi0 must have
// decayed below quad.abs_tol at the grid edges.  n_threads parallelizes
// over output points (deterministic result regardless of thread count).
std::vector<Complex> propagate_state(KernelMethod method, const PartnerModel& pm,
                                     const Grid1D& grid,
                                     std::span<const Complex> phi0, double t,
                                     QuadratureSpec quad = {}, int spectral_terms = 64,
                                     int n_threads = 0);

// Untransformed reference: evolution under the base problem itself.
std::vector<Complex> propagate_state_base(const BaseProblem& base, const Grid1D& grid,
                                          std::span<const Complex> phi0, double t,
                                          int n_threads = 0);

}  // namespace susyprop
