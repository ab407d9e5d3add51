#include "susyprop/kernel.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "susyprop/detail/parallel.hpp"
#include "susyprop/specfun.hpp"

namespace susyprop {

namespace {

void require_branch_cell(const PartnerModel& pm, double t) {
  if (pm.base_kind() == BaseKind::Oscillator && !(t > 0.0 && t < M_PI))
    throw SingularTimeError("oscillator kernels are evaluated on 0 < t < pi only");
}

// Envelope bound on |integrand| beyond |z| = r, used to certify the window.
// Free base: |f| = e^{-a|z|}; oscillator: |f| <= e^{-z^2/4}/|z| for |z| >= 2.
// |L_x K0| <= (c0 + c1 |z|) with the kernel prefactor folded in.
double tail_envelope(BaseKind kind, double decay, double c0, double c1, double r) {
  if (kind == BaseKind::Free) {
    const double a = decay;
    return std::exp(-a * r) * ((c0 + c1 * r) / a + c1 / (a * a));
  }
  return (c0 / r + c1) * (2.0 / r) * std::exp(-0.25 * r * r);
}

struct Window {
  double radius;
  double tail_bound;
};

Window certified_window(const PartnerModel& pm, double x, double y, double t,
                        const QuadratureSpec& quad, double prefactor_scale) {
  const BaseKind kind = pm.base_kind();
  double r;
  double decay = 0.0;
  if (kind == BaseKind::Free) {
    decay = std::sqrt(-pm.fact.alpha);
    r = std::max(std::abs(x), std::abs(y)) + 10.0 + 4.0 * std::sqrt(std::abs(t));
  } else {
    r = 12.0;
  }
  const double s = kind == BaseKind::Free ? std::abs(t) : std::abs(std::sin(t));
  const double kernel_scale = 1.0 / std::sqrt(4.0 * M_PI * s);
  const double w_x = std::abs(pm.fact.log_derivative(x));
  const double cos_t = kind == BaseKind::Free ? 1.0 : std::abs(std::cos(t));
  const double c0 = kernel_scale * (w_x + std::abs(x) * cos_t / (2.0 * s));
  const double c1 = kernel_scale / (2.0 * s);

  // the window default must certifiably bound the discarded tail; grow it
  // until the envelope estimate is an order below the absolute tolerance
  double bound = prefactor_scale * tail_envelope(kind, decay, c0, c1, r);
  while (bound > 0.1 * quad.abs_tol && r < 80.0) {
    r += 4.0;
    bound = prefactor_scale * tail_envelope(kind, decay, c0, c1, r);
  }
  if (bound > quad.abs_tol)
    throw QuadratureError("theorem_kernel: cannot certify the truncation tail", bound);
  return {r, bound};
}

}  // namespace

const char* kernel_method_name(KernelMethod m) {
  switch (m) {
    case KernelMethod::TheoremQuad: return "theorem";
    case KernelMethod::ClosedForm: return "closed";
    case KernelMethod::SpectralSum: return "spectral";
    case KernelMethod::OracleCN: return "cn";
  }
  return "unknown";
}

TheoremParts theorem_kernel_parts(const PartnerModel& pm, double x, double y,
                                  double t, QuadratureSpec quad) {
  require_branch_cell(pm, t);
  const Factorization& f = pm.fact;
  const BaseProblem& base = f.base;
  const JostPair jp = base.jost(f.alpha);

  const Complex w_x = f.log_derivative(x);
  auto lx_k0 = [&](double z) {
    return -w_x * base.propagator(x, z, t) + base.propagator_dx(x, z, t);
  };

  const Complex w_y = f.log_derivative(y);
  const Complex l_fl = -w_y * jp.f_l(y) + jp.f_l_prime(y);
  const Complex l_fr = -w_y * jp.f_r(y) + jp.f_r_prime(y);
  const Complex denom = jp.resolvent_denominator();
  const double prefactor_scale =
      std::max(std::abs(l_fl), std::abs(l_fr)) / std::abs(denom);

  Window win{quad.truncation_radius, 0.0};
  if (win.radius <= 0.0) win = certified_window(pm, x, y, t, quad, prefactor_scale);
  const double lo = std::min(-win.radius, y - 1.0);
  const double hi = std::max(win.radius, y + 1.0);

  Integral left = integrate([&](double z) { return lx_k0(z) * jp.f_l(z); }, lo, y, quad);
  Integral right = integrate([&](double z) { return lx_k0(z) * jp.f_r(z); }, y, hi, quad);
  if (!left.converged || !right.converged)
    throw QuadratureError("theorem_kernel: z-integral did not converge",
                          left.error + right.error);

  TheoremParts parts;
  parts.transformed = (l_fr * left.value + l_fl * right.value) / denom;
  parts.err_estimate =
      (std::abs(l_fr) * left.error + std::abs(l_fl) * right.error) / std::abs(denom) +
      win.tail_bound;
  parts.bound_term = {0.0, 0.0};
  if (f.case_tag == CaseTag::CaseII) {
    const Complex phase = std::exp(-kImagUnit * f.alpha * t);
    parts.bound_term = bound_state(f, x) * bound_state(f, y) * phase;
  }
  return parts;
}

KernelEval theorem_kernel(const PartnerModel& pm, double x, double y, double t,
                          QuadratureSpec quad) {
  const TheoremParts parts = theorem_kernel_parts(pm, x, y, t, quad);
  return {parts.total(), parts.err_estimate, KernelMethod::TheoremQuad};
}

KernelEval soliton_kernel_closed(double a, Complex c, double x, double y, double t) {
  if (t == 0.0) throw SingularTimeError("soliton_kernel_closed: t = 0");
  const Complex sqrt_it = std::sqrt(kImagUnit * t);
  const Complex s = a * sqrt_it;
  const Complex d = (x - y) / (2.0 * sqrt_it);
  const Complex erf_sum = cerf(s + d) + cerf(s - d);
  const Complex ux = std::cosh(a * x + c);
  const Complex uy = std::cosh(a * y + c);
  const Complex free_part = free_propagator(x, y, t);
  const Complex soliton_part =
      a * std::exp(kImagUnit * a * a * t) / (4.0 * ux * uy) * erf_sum;
  const double err = 1e-12 * (std::abs(free_part) + std::abs(soliton_part));
  return {free_part + soliton_part, err, KernelMethod::ClosedForm};
}

KernelEval oscillator_kernel_closed(Complex C, double x, double y, double t,
                                    QuadratureSpec quad) {
  if (!(t > 0.0 && t < M_PI))
    throw SingularTimeError("oscillator kernels are evaluated on 0 < t < pi only");
  const Factorization f = make_oscillator_transform(C);
  const PartnerModel pm{f};

  const Complex w_x = f.log_derivative(x);
  auto lx_k0 = [&](double z) {
    return -w_x * osc_propagator(x, z, t) + osc_propagator_dx(x, z, t);
  };
  // weight_l = e^{z^2/4} (1 + erf(z/sqrt(2))), weight_r with the minus sign;
  // the erfc form keeps the decaying tails fully accurate
  auto weight_l = [](double z) {
    return std::exp(0.25 * z * z) * std::erfc(-z * M_SQRT1_2);
  };
  auto weight_r = [](double z) {
    return std::exp(0.25 * z * z) * std::erfc(z * M_SQRT1_2);
  };

  const Complex uy = f.u(y);
  const double prefactor_scale = std::abs(C) + 1.0;
  Window win{quad.truncation_radius, 0.0};
  if (win.radius <= 0.0) win = certified_window(pm, x, y, t, quad, prefactor_scale);
  const double lo = std::min(-win.radius, y - 1.0);
  const double hi = std::max(win.radius, y + 1.0);

  Integral left = integrate([&](double z) { return lx_k0(z) * weight_l(z); }, lo, y, quad);
  Integral right = integrate([&](double z) { return lx_k0(z) * weight_r(z); }, y, hi, quad);
  if (!left.converged || !right.converged)
    throw QuadratureError("oscillator_kernel_closed: z-integral did not converge",
                          left.error + right.error);

  const Complex transformed =
      (-(C + 1.0) * left.value + (C - 1.0) * right.value) / (2.0 * uy);
  const Complex bound =
      bound_state(f, x) * bound_state(f, y) * std::exp(kImagUnit * 0.5 * t);
  const double err =
      (std::abs(C + 1.0) * left.error + std::abs(C - 1.0) * right.error) /
          (2.0 * std::abs(uy)) +
      win.tail_bound;
  return {transformed + bound, err, KernelMethod::ClosedForm};
}

KernelEval closed_kernel(const PartnerModel& pm, double x, double y, double t,
                         QuadratureSpec quad) {
  if (const auto* sol = std::get_if<SolitonParams>(&pm.fact.params))
    return soliton_kernel_closed(sol->a, sol->c, x, y, t);
  const auto& osc = std::get<OscillatorParams>(pm.fact.params);
  return oscillator_kernel_closed(osc.C, x, y, t, quad);
}

KernelEval spectral_kernel(const PartnerModel& pm, int n_terms, double x,
                           double y, double t) {
  if (pm.base_kind() != BaseKind::Oscillator)
    throw Error("spectral_kernel: base problem has no discrete spectrum");
  if (n_terms < 1) throw std::invalid_argument("spectral_kernel: n_terms >= 1");
  const std::vector<Complex> phi_x = pm.eigenfunctions(n_terms, x);
  const std::vector<Complex> phi_y = pm.eigenfunctions(n_terms, y);
  Complex sum{0.0, 0.0};
  for (int n = 0; n < n_terms; ++n) {
    const double en = pm.fact.base.eigenvalue(n);
    sum += phi_x[n] * phi_y[n] * std::exp(-kImagUnit * en * t);
  }
  if (pm.fact.case_tag == CaseTag::CaseII)
    sum += bound_state(pm.fact, x) * bound_state(pm.fact, y) *
           std::exp(-kImagUnit * pm.fact.alpha * t);
  // truncation indicator, not a convergence claim: the tail is O(1)
  // pointwise and only small against localized states
  const double truncation = std::abs(phi_x[n_terms] * phi_y[n_terms]);
  return {sum, truncation, KernelMethod::SpectralSum};
}

namespace {

void check_tail_mass(const Grid1D& grid, std::span<const Complex> phi0, double abs_tol) {
  const double h = grid.spacing();
  double norm2 = 0.0;
  for (const Complex& v : phi0) norm2 += std::norm(v);
  norm2 *= h;
  const int n = grid.size();
  const double edge2 =
      h * (std::norm(phi0[0]) + std::norm(phi0[1]) + std::norm(phi0[n - 2]) +
           std::norm(phi0[n - 1]));
  if (edge2 > abs_tol * std::max(norm2, 1e-30))
    throw DomainTooSmallError("propagate_state: state has not decayed at the grid edges");
}

template <class KernelFn>
std::vector<Complex> propagate_rows(const Grid1D& grid, std::span<const Complex> phi0,
                                    int n_threads, KernelFn&& kernel_at) {
  const int n = grid.size();
  const double h = grid.spacing();
  std::vector<Complex> out(n);
  detail::parallel_for(n, n_threads, [&](int i) {
    const double x = grid.point(i);
    Complex acc = 0.5 * (kernel_at(x, grid.point(0)) * phi0[0] +
                         kernel_at(x, grid.point(n - 1)) * phi0[n - 1]);
    for (int j = 1; j + 1 < n; ++j) acc += kernel_at(x, grid.point(j)) * phi0[j];
    out[i] = acc * h;
  });
  return out;
}

}  // namespace

std::vector<Complex> propagate_state(KernelMethod method, const PartnerModel& pm,
                                     const Grid1D& grid, std::span<const Complex> phi0,
                                     double t, QuadratureSpec quad, int spectral_terms,
                                     int n_threads) {
  if (static_cast<int>(phi0.size()) != grid.size())
    throw GridMismatchError("propagate_state: state length does not match grid");
  check_tail_mass(grid, phi0, quad.abs_tol);

  switch (method) {
    case KernelMethod::TheoremQuad:
      return propagate_rows(grid, phi0, n_threads, [&](double x, double y) {
        return theorem_kernel(pm, x, y, t, quad).value;
      });
    case KernelMethod::ClosedForm:
      return propagate_rows(grid, phi0, n_threads, [&](double x, double y) {
        return closed_kernel(pm, x, y, t, quad).value;
      });
    case KernelMethod::SpectralSum: {
      // identical to pairing the sampled spectral kernel with phi0, summed
      // coefficient-first: c_n = h sum_j phi_n(y_j) phi0_j (trapezoid)
      const int n = grid.size();
      const double h = grid.spacing();
      std::vector<std::vector<Complex>> phi(n);
      detail::parallel_for(n, n_threads, [&](int j) {
        phi[j] = pm.eigenfunctions(spectral_terms - 1, grid.point(j));
      });
      std::vector<Complex> coeff(spectral_terms, Complex{0.0, 0.0});
      for (int m = 0; m < spectral_terms; ++m) {
        Complex acc = 0.5 * (phi[0][m] * phi0[0] + phi[n - 1][m] * phi0[n - 1]);
        for (int j = 1; j + 1 < n; ++j) acc += phi[j][m] * phi0[j];
        coeff[m] = acc * h;
      }
      Complex bound_coeff{0.0, 0.0};
      std::vector<Complex> bound(n);
      if (pm.fact.case_tag == CaseTag::CaseII) {
        for (int j = 0; j < n; ++j) bound[j] = bound_state(pm.fact, grid.point(j));
        Complex acc = 0.5 * (bound[0] * phi0[0] + bound[n - 1] * phi0[n - 1]);
        for (int j = 1; j + 1 < n; ++j) acc += bound[j] * phi0[j];
        bound_coeff = acc * h;
      }
      std::vector<Complex> out(n, Complex{0.0, 0.0});
      for (int i = 0; i < n; ++i) {
        Complex acc{0.0, 0.0};
        for (int m = 0; m < spectral_terms; ++m)
          acc += phi[i][m] * coeff[m] *
                 std::exp(-kImagUnit * pm.fact.base.eigenvalue(m) * t);
        if (pm.fact.case_tag == CaseTag::CaseII)
          acc += bound[i] * bound_coeff * std::exp(-kImagUnit * pm.fact.alpha * t);
        out[i] = acc;
      }
      return out;
    }
    case KernelMethod::OracleCN:
      throw std::invalid_argument(
          "propagate_state: the CN oracle lives in the oracle module, not here");
  }
  throw std::invalid_argument("propagate_state: unknown method");
}

std::vector<Complex> propagate_state_base(const BaseProblem& base, const Grid1D& grid,
                                          std::span<const Complex> phi0, double t,
                                          int n_threads) {
  if (static_cast<int>(phi0.size()) != grid.size())
    throw GridMismatchError("propagate_state_base: state length does not match grid");
  check_tail_mass(grid, phi0, 1e-10);
  return propagate_rows(grid, phi0, n_threads,
                        [&](double x, double y) { return base.propagator(x, y, t); });
}

}  // namespace susyprop
