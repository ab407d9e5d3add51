#pragma once

#include <array>
#include <cmath>
#include <queue>
#include <span>
#include <utility>
#include <vector>

#include "susyprop/types.hpp"

namespace susyprop {

struct QuadratureSpec {
  // Integration window half-width; 0 means "let the caller pick a default
  // appropriate for the integrand and certify the tail".
  double truncation_radius = 0.0;
  double abs_tol = 1e-10;
  double rel_tol = 1e-9;
  int max_subdivisions = 2000;
};

struct Integral {
  Complex value{0.0, 0.0};
  double error = 0.0;
  int evaluations = 0;
  bool converged = false;
};

namespace detail {

// 15-point Kronrod extension of the 7-point Gauss rule (nodes/weights as
// tabulated in QUADPACK/GSL).  xgk[1], xgk[3], ... are the Gauss nodes.
inline constexpr std::array<double, 8> kGk15Nodes = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144838258730, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};

inline constexpr std::array<double, 4> kGauss7Weights = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

inline constexpr std::array<double, 8> kGk15Weights = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};

template <class F>
std::pair<Complex, double> gk15(F&& f, double a, double b) {
  const double mid = 0.5 * (a + b);
  const double half = 0.5 * (b - a);

  const Complex f0 = f(mid);
  Complex gauss = kGauss7Weights[3] * f0;
  Complex kronrod = kGk15Weights[7] * f0;
  for (int i = 0; i < 7; ++i) {
    const double dx = half * kGk15Nodes[i];
    const Complex fsum = f(mid + dx) + f(mid - dx);
    kronrod += kGk15Weights[i] * fsum;
    if (i % 2 == 1) gauss += kGauss7Weights[i / 2] * fsum;
  }
  gauss *= half;
  kronrod *= half;
  return {kronrod, std::abs(kronrod - gauss)};
}

struct Segment {
  double a, b;
  Complex value;
  double error;
  bool operator<(const Segment& o) const { return error < o.error; }
};

}  // namespace detail

// Adaptive Gauss-Kronrod integration of a complex-valued integrand over
// [a, b].  Worst interval is split first; terminates once the summed error
// estimate meets max(abs_tol, rel_tol*|integral|) or the subdivision budget
// is exhausted (converged = false, the partial result is still returned).
template <class F>
Integral integrate(F&& f, double a, double b, const QuadratureSpec& spec = {}) {
  Integral out;
  if (a == b) {
    out.converged = true;
    return out;
  }

  std::priority_queue<detail::Segment> queue;
  auto [v0, e0] = detail::gk15(f, a, b);
  queue.push({a, b, v0, e0});
  out.evaluations = 15;
  Complex total = v0;
  double total_err = e0;

  int splits = 0;
  while (total_err > std::max(spec.abs_tol, spec.rel_tol * std::abs(total))) {
    if (splits >= spec.max_subdivisions) {
      out.value = total;
      out.error = total_err;
      return out;
    }
    detail::Segment worst = queue.top();
    queue.pop();
    const double mid = 0.5 * (worst.a + worst.b);
    if (mid == worst.a || mid == worst.b) {
      // interval at round-off resolution; keep its estimate and give up on it
      queue.push({worst.a, worst.b, worst.value, 0.0});
      total_err -= worst.error;
      continue;
    }
    auto [vl, el] = detail::gk15(f, worst.a, mid);
    auto [vr, er] = detail::gk15(f, mid, worst.b);
    out.evaluations += 30;
    total += vl + vr - worst.value;
    total_err += el + er - worst.error;
    queue.push({worst.a, mid, vl, el});
    queue.push({mid, worst.b, vr, er});
    ++splits;
  }

  out.value = total;
  out.error = total_err;
  out.converged = true;
  return out;
}

template <class F>
Complex integrate_or_throw(F&& f, double a, double b,
                           const QuadratureSpec& spec = {}) {
  Integral r = integrate(std::forward<F>(f), a, b, spec);
  if (!r.converged) throw QuadratureError("adaptive quadrature did not converge", r.error);
  return r.value;
}

// Composite trapezoid over uniform samples.  For smooth integrands that
// decay below tolerance at both window ends this is superalgebraically
// accurate (all Euler-Maclaurin boundary terms vanish), which is exactly
// the regime of every sampled-state integral in this library.
inline Complex sampled_integral(std::span<const Complex> f, double h) {
  if (f.size() < 2) return {0.0, 0.0};
  Complex s = 0.5 * (f.front() + f.back());
  for (std::size_t i = 1; i + 1 < f.size(); ++i) s += f[i];
  return s * h;
}

inline double sampled_norm(std::span<const Complex> f, double h) {
  double s = 0.5 * (std::norm(f.front()) + std::norm(f.back()));
  for (std::size_t i = 1; i + 1 < f.size(); ++i) s += std::norm(f[i]);
  return std::sqrt(s * h);
}

}  // namespace susyprop
