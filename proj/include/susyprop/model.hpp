#pragma once

#include "susyprop/types.hpp"

namespace susyprop {

// Caustic guard: oscillator kernels are distributions where |sin t| drops
// below this, and the free kernel at t = 0.
inline constexpr double kSingularTimeEps = 1e-6;

enum class BaseKind { Free, Oscillator };

// Free particle: K0(x,y,t) = exp(i (x-y)^2 / 4t) / sqrt(4 pi i t),
// principal branch of the square root.  Throws SingularTimeError at t = 0.
Complex free_propagator(double x, double y, double t);
Complex free_propagator_dx(double x, double y, double t);

// Free resolvent kernel G0(x,y,E) = (i/2k) exp(i k |x-y|) with k = sqrt(E),
// Im k > 0, satisfying (-d^2/dx^2 - E) G0 = delta(x-y).  E must lie off the
// continuous spectrum [0, inf).
Complex free_green(double x, double y, Complex E);

// Oscillator h0 = -d^2/dx^2 + x^2/4:
// K0(x,y,t) = (4 pi i sin t)^{-1/2} exp(i [(x^2+y^2) cos t - 2xy] / 4 sin t).
// Principal square root; valid as the propagator on the branch cell
// 0 < t < pi (no Maslov tracking beyond it).
Complex osc_propagator(double x, double y, double t);
Complex osc_propagator_dx(double x, double y, double t);

// Oscillator resolvent kernel at E = -1/2, assembled from the two decaying
// solutions f_{l,r}(x) = sqrt(pi/2) exp(x^2/4) erfc(∓x/sqrt(2)):
//   G(x,y) = f_l(min) f_r(max) / (f_l' f_r - f_l f_r'),
// normalized so that (h0 - E) G = delta(x-y).
Complex osc_green_neg_half(double x, double y);

// The pair of solutions of h0 f = alpha f decaying at -inf (f_l) and +inf
// (f_r), used to build resolvent kernels and the transformed propagator.
struct JostPair {
  BaseKind kind;
  double alpha;
  double decay;  // free case: f_l = exp(decay * x), decay = sqrt(-alpha)

  Complex f_l(double x) const;
  Complex f_l_prime(double x) const;
  Complex f_r(double x) const;
  Complex f_r_prime(double x) const;

  // Wronskian f_l f_r' - f_l' f_r; x-independent for solutions of the same
  // stationary equation.
  Complex wronskian(double x) const;

  // f_l' f_r - f_l f_r' (= -wronskian), the denominator that makes
  // f_l(min) f_r(max) / denom the kernel of (h0 - alpha)^{-1}.
  Complex resolvent_denominator() const;
};

class BaseProblem {
 public:
  static BaseProblem free_particle() { return BaseProblem(BaseKind::Free); }
  static BaseProblem oscillator() { return BaseProblem(BaseKind::Oscillator); }

  BaseKind kind() const { return kind_; }

  double potential(double x) const;  // V0, identically real
  bool has_discrete_spectrum() const { return kind_ == BaseKind::Oscillator; }
  double eigenvalue(int n) const;            // oscillator: n + 1/2
  double eigenfunction(int n, double x) const;
  double eigenfunction_deriv(int n, double x) const;

  Complex propagator(double x, double y, double t) const;
  Complex propagator_dx(double x, double y, double t) const;
  Complex green(double x, double y, Complex E) const;

  // alpha must lie below the spectrum floor (free: alpha < 0;
  // oscillator: only alpha = -1/2 is provided).
  JostPair jost(double alpha) const;

 private:
  explicit BaseProblem(BaseKind k) : kind_(k) {}
  BaseKind kind_;
};

}  // namespace susyprop
