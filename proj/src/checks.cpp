#include "susyprop/checks.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <random>

#include "susyprop/detail/parallel.hpp"
#include "susyprop/kernel.hpp"
#include "susyprop/model.hpp"
#include "susyprop/oracle.hpp"
#include "susyprop/quadrature.hpp"
#include "susyprop/specfun.hpp"
#include "susyprop/susy.hpp"

namespace susyprop {

namespace {

constexpr double kSqrt2Pi = 2.5066282746310002416;

// ---------------------------------------------------------------------------
// shared helpers
// ---------------------------------------------------------------------------

std::vector<double> linspace(double a, double b, int n) {
  std::vector<double> xs(n);
  for (int i = 0; i < n; ++i) xs[i] = a + (b - a) * i / (n - 1);
  return xs;
}

double l2_rel(const std::vector<Complex>& f, const std::vector<Complex>& g) {
  double d = 0.0, nf = 0.0, ng = 0.0;
  for (std::size_t i = 0; i < f.size(); ++i) {
    d += std::norm(f[i] - g[i]);
    nf += std::norm(f[i]);
    ng += std::norm(g[i]);
  }
  return std::sqrt(d / std::max(nf, ng));
}

struct Packet {
  double center = 0.0, width = 1.0, momentum = 0.0;
  Complex operator()(double x) const {
    const double xs = x - center;
    return std::pow(M_PI * width * width, -0.25) *
           std::exp(Complex(-0.5 * xs * xs / (width * width), momentum * xs));
  }
  Complex deriv(double x) const {
    const double xs = x - center;
    return Complex(-xs / (width * width), momentum) * (*this)(x);
  }
};

std::vector<Complex> sample(const Grid1D& grid, const std::function<Complex(double)>& f) {
  std::vector<Complex> v(grid.size());
  for (int j = 0; j < grid.size(); ++j) v[j] = f(grid.point(j));
  return v;
}

std::vector<Complex> sample_potential(const PartnerModel& pm, const Grid1D& grid) {
  return sample(grid, [&](double x) { return pm.potential(x); });
}

// Exact evolution of a Gaussian packet under i dPhi/dt = -Phi'':
// width^2 -> width^2 + 2it, center drifts with group velocity 2 k0.
Complex free_gaussian(const Packet& p, double x, double t) {
  const Complex denom = p.width * p.width + 2.0 * kImagUnit * t;
  const double xs = x - p.center;
  return std::pow(M_PI * p.width * p.width, -0.25) *
         std::sqrt(p.width * p.width / denom) *
         std::exp(kImagUnit * (p.momentum * xs - p.momentum * p.momentum * t) -
                  (xs - 2.0 * p.momentum * t) * (xs - 2.0 * p.momentum * t) /
                      (2.0 * denom));
}

// Phi(x_i) = trapezoid_y kernel(x_i, y) phi0(y) for each requested x.
std::vector<Complex> pair_with_kernel(const std::vector<double>& xs, const Grid1D& grid,
                                      const std::vector<Complex>& phi0,
                                      const std::function<Complex(double, double)>& kernel,
                                      int threads) {
  const int n = grid.size();
  const double h = grid.spacing();
  std::vector<Complex> out(xs.size());
  detail::parallel_for(static_cast<int>(xs.size()), threads, [&](int i) {
    Complex acc = 0.5 * (kernel(xs[i], grid.point(0)) * phi0[0] +
                         kernel(xs[i], grid.point(n - 1)) * phi0[n - 1]);
    for (int j = 1; j + 1 < n; ++j) acc += kernel(xs[i], grid.point(j)) * phi0[j];
    out[i] = acc * h;
  });
  return out;
}

// 4th-order first/second derivatives on uniform samples; two-point skirt
// left zero, callers mask it.
std::vector<Complex> d1_4(const std::vector<Complex>& g, double h) {
  const int n = static_cast<int>(g.size());
  std::vector<Complex> out(n, Complex{0.0, 0.0});
  for (int j = 2; j + 2 < n; ++j)
    out[j] = (-g[j + 2] + 8.0 * g[j + 1] - 8.0 * g[j - 1] + g[j - 2]) / (12.0 * h);
  return out;
}

std::vector<Complex> d2_4(const std::vector<Complex>& g, double h) {
  const int n = static_cast<int>(g.size());
  std::vector<Complex> out(n, Complex{0.0, 0.0});
  for (int j = 2; j + 2 < n; ++j)
    out[j] = (-g[j + 2] + 16.0 * g[j + 1] - 30.0 * g[j] + 16.0 * g[j - 1] - g[j - 2]) /
             (12.0 * h * h);
  return out;
}

double sup_on(const std::vector<Complex>& v, const Grid1D& grid, double x_lim,
              int margin) {
  double m = 0.0;
  for (int j = margin; j < grid.size() - margin; ++j)
    if (std::abs(grid.point(j)) <= x_lim) m = std::max(m, std::abs(v[j]));
  return m;
}

// ---------------------------------------------------------------------------
// acceptance checks
// ---------------------------------------------------------------------------

double acc01_soliton_closed_vs_theorem(const CheckOptions& opts) {
  const auto start = std::chrono::steady_clock::now();
  const PartnerModel pm = make_soliton_partner(1.0, 2.0);
  const auto& sp = std::get<SolitonParams>(pm.fact.params);
  const std::vector<double> xs = linspace(-5.0, 5.0, 11);
  std::vector<double> diffs(2 * xs.size() * xs.size(), 0.0);
  for (int ti = 0; ti < 2; ++ti) {
    const double t = ti == 0 ? 0.3 : 1.0;
    detail::parallel_for(static_cast<int>(xs.size()), opts.threads, [&](int i) {
      for (std::size_t j = 0; j < xs.size(); ++j) {
        const Complex closed = soliton_kernel_closed(1.0, sp.c, xs[i], xs[j], t).value;
        const Complex theorem = theorem_kernel(pm, xs[i], xs[j], t).value;
        diffs[(ti * xs.size() + i) * xs.size() + j] = std::abs(closed - theorem);
      }
    });
  }
  double metric = *std::max_element(diffs.begin(), diffs.end());
  const double elapsed =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (elapsed > 60.0) metric = 1.0;  // the runtime budget is part of the criterion
  return metric;
}

double acc02_oscillator_packet_three_way(const CheckOptions& opts) {
  const PartnerModel pm = make_oscillator_partner({0.0, 2.0});
  const Grid1D grid(-15.0, 15.0, 601);
  const Packet packet{1.0, 1.0, 0.0};
  const std::vector<Complex> phi0 = sample(grid, packet);
  const double t = 0.7;

  // x lattice: every 4th grid point of [-8, 8]
  std::vector<double> xs;
  std::vector<int> idx;
  for (int j = 140; j <= 460; j += 4) {
    xs.push_back(grid.point(j));
    idx.push_back(j);
  }

  const std::vector<Complex> via_theorem = pair_with_kernel(
      xs, grid, phi0,
      [&](double x, double y) { return theorem_kernel(pm, x, y, t).value; },
      opts.threads);
  const std::vector<Complex> via_closed = pair_with_kernel(
      xs, grid, phi0,
      [&](double x, double y) { return closed_kernel(pm, x, y, t).value; },
      opts.threads);

  const std::vector<Complex> spectral_full =
      propagate_state(KernelMethod::SpectralSum, pm, grid, phi0, t, {}, 64, opts.threads);
  const std::vector<Complex> cn_full =
      cn_evolve(sample_potential(pm, grid), phi0, make_evolution_config(grid, t, 1e-3));
  std::vector<Complex> via_spectral(idx.size()), via_cn(idx.size());
  for (std::size_t k = 0; k < idx.size(); ++k) {
    via_spectral[k] = spectral_full[idx[k]];
    via_cn[k] = cn_full[idx[k]];
  }

  const std::vector<const std::vector<Complex>*> all = {&via_theorem, &via_closed,
                                                        &via_spectral, &via_cn};
  double metric = 0.0;
  for (std::size_t i = 0; i < all.size(); ++i)
    for (std::size_t j = i + 1; j < all.size(); ++j)
      metric = std::max(metric, l2_rel(*all[i], *all[j]));
  return metric;
}

double acc03_bound_state_phase(const CheckOptions& opts) {
  double metric = 0.0;
  const std::vector<double> xs = linspace(-4.0, 4.0, 11);
  const Grid1D grid(-18.0, 18.0, 721);
  for (int which = 0; which < 2; ++which) {
    const PartnerModel pm = which == 0 ? make_oscillator_partner({0.0, 2.0})
                                       : make_soliton_partner(1.0, 2.0);
    const double t = 0.7;
    const std::vector<Complex> phi_a = sample(grid, [&](double y) { return pm.bound(y); });
    const std::vector<Complex> evolved = pair_with_kernel(
        xs, grid, phi_a,
        [&](double x, double y) { return theorem_kernel(pm, x, y, t).value; },
        opts.threads);
    const Complex phase = std::exp(-kImagUnit * pm.fact.alpha * t);
    for (std::size_t i = 0; i < xs.size(); ++i)
      metric = std::max(metric, std::abs(evolved[i] - phase * pm.bound(xs[i])));
  }
  return metric;
}

double acc04a_bilinear_norm_oscillator(const CheckOptions&) {
  const PartnerModel pm = make_oscillator_partner({0.0, 2.0});
  const Complex n2 = bilinear_norm([&](double x) { return pm.bound(x); });
  return std::abs(n2 - 1.0);
}

double acc04b_bilinear_norm_soliton(const CheckOptions&) {
  const PartnerModel pm = make_soliton_partner(1.0, 2.0);
  QuadratureSpec spec;
  spec.truncation_radius = 30.0;
  spec.abs_tol = 1e-12;
  spec.rel_tol = 1e-12;
  const Complex n2 = bilinear_norm([&](double x) { return pm.bound(x); }, spec);
  return std::abs(n2 - 1.0);
}

double acc05_bilinear_orthonormality(const CheckOptions&) {
  const PartnerModel pm = make_oscillator_partner({0.0, 2.0});
  QuadratureSpec spec;
  const double radius = 18.0;
  double metric = 0.0;
  for (int m = 0; m <= 10; ++m)
    for (int n = m; n <= 10; ++n) {
      const Integral r = integrate(
          [&](double x) {
            const auto phi = pm.eigenfunctions(std::max(m, n), x);
            return phi[m] * phi[n];
          },
          -radius, radius, spec);
      metric = std::max(metric, std::abs(r.value - (m == n ? 1.0 : 0.0)));
    }
  for (int n = 0; n <= 6; ++n) {
    const Integral r =
        integrate([&](double x) { return pm.bound(x) * pm.eigenfunction(n, x); },
                  -radius, radius, spec);
    metric = std::max(metric, std::abs(r.value));
  }
  return metric;
}

// Residuals of (L^t L - h0 + alpha) g and (L L^t - h_c + alpha) g with every
// derivative taken by 4th-order stencils; returns the worst (smallest)
// sup-residual contraction when h is halved.
double acc06_factorization_identities(const CheckOptions&) {
  double min_ratio = 1e300;
  for (int which = 0; which < 2; ++which) {
    const PartnerModel pm = which == 0 ? make_oscillator_partner({0.0, 2.0})
                                       : make_soliton_partner(1.0, 2.0);
    const Factorization& f = pm.fact;
    double prev_ltl = 0.0, prev_llt = 0.0;
    for (int level = 0; level < 2; ++level) {
      const int n = level == 0 ? 801 : 1601;
      const Grid1D grid(-8.0, 8.0, n);
      const double h = grid.spacing();
      std::vector<Complex> g(n), w(n), v0(n), vc(n);
      for (int j = 0; j < n; ++j) {
        const double x = grid.point(j);
        g[j] = (1.0 + 0.4 * x + 0.3 * x * x) * std::exp(-0.25 * x * x);
        w[j] = f.log_derivative(x);
        v0[j] = f.base.potential(x);
        vc[j] = pm.potential(x);
      }
      const auto d1g = d1_4(g, h);
      std::vector<Complex> lg(n), ltg(n);
      for (int j = 0; j < n; ++j) {
        lg[j] = -w[j] * g[j] + d1g[j];
        ltg[j] = -w[j] * g[j] - d1g[j];
      }
      const auto d1lg = d1_4(lg, h);
      const auto d1ltg = d1_4(ltg, h);
      const auto d2g = d2_4(g, h);
      std::vector<Complex> res_ltl(n, Complex{0.0, 0.0}), res_llt(n, Complex{0.0, 0.0});
      for (int j = 4; j + 4 < n; ++j) {
        const Complex h0g = -d2g[j] + v0[j] * g[j];
        const Complex hcg = -d2g[j] + vc[j] * g[j];
        res_ltl[j] = (-w[j] * lg[j] - d1lg[j]) - h0g + f.alpha * g[j];
        res_llt[j] = (-w[j] * ltg[j] + d1ltg[j]) - hcg + f.alpha * g[j];
      }
      const double sup_ltl = sup_on(res_ltl, grid, 6.0, 4);
      const double sup_llt = sup_on(res_llt, grid, 6.0, 4);
      if (level == 1) {
        min_ratio = std::min(min_ratio, prev_ltl / sup_ltl);
        min_ratio = std::min(min_ratio, prev_llt / sup_llt);
      }
      prev_ltl = sup_ltl;
      prev_llt = sup_llt;
    }
  }
  return min_ratio;
}

double acc07_intertwining_evolution(const CheckOptions& opts) {
  const Packet g{0.5, 1.2, 0.3};
  const std::vector<double> xs = linspace(-4.0, 4.0, 11);
  const double t = 0.7;
  double metric = 0.0;
  for (int which = 0; which < 2; ++which) {
    const PartnerModel pm = which == 0 ? make_oscillator_partner({0.0, 2.0})
                                       : make_soliton_partner(1.0, 2.0);
    const Factorization& f = pm.fact;
    const Grid1D grid(-18.0, 18.0, 721);
    std::vector<Complex> lg(grid.size()), gv(grid.size());
    for (int j = 0; j < grid.size(); ++j) {
      const double y = grid.point(j);
      gv[j] = g(y);
      lg[j] = apply_L(f, g(y), g.deriv(y), y);
    }
    const std::vector<Complex> lhs = pair_with_kernel(
        xs, grid, lg,
        [&](double x, double y) { return theorem_kernel(pm, x, y, t).value; },
        opts.threads);
    // L_x applied to the base evolution through the analytic kernel gradient
    const std::vector<Complex> i0 = pair_with_kernel(
        xs, grid, gv, [&](double x, double y) { return f.base.propagator(x, y, t); },
        opts.threads);
    const std::vector<Complex> i1 = pair_with_kernel(
        xs, grid, gv, [&](double x, double y) { return f.base.propagator_dx(x, y, t); },
        opts.threads);
    for (std::size_t i = 0; i < xs.size(); ++i) {
      const Complex rhs = -f.log_derivative(xs[i]) * i0[i] + i1[i];
      metric = std::max(metric, std::abs(lhs[i] - rhs));
    }
  }
  return metric;
}

double acc08_wronskian_constancy(const CheckOptions&) {
  const JostPair jp = BaseProblem::oscillator().jost(-0.5);
  double metric = 0.0;
  for (double x : linspace(-3.0, 3.0, 21))
    metric =
        std::max(metric, std::abs(jp.wronskian(x) - Complex(-kSqrt2Pi, 0.0)) / kSqrt2Pi);
  return metric;
}

double acc09_pde_residual(const CheckOptions&) {
  const PartnerModel osc = make_oscillator_partner({0.0, 2.0});
  const PartnerModel sol = make_soliton_partner(1.0, 2.0);
  const auto& sp = std::get<SolitonParams>(sol.fact.params);
  QuadratureSpec tight;
  tight.abs_tol = 1e-12;
  tight.rel_tol = 1e-11;
  const double t0 = 0.7;
  const std::vector<std::pair<double, double>> pts = {{0.3, -0.4}, {1.1, 0.6}, {-1.2, 0.8}};

  double min_ratio = 1e300;
  for (int which = 0; which < 2; ++which) {
    auto kernel = [&](double x, double y, double t) {
      return which == 0 ? soliton_kernel_closed(1.0, sp.c, x, y, t).value
                        : oscillator_kernel_closed({0.0, 2.0}, x, y, t, tight).value;
    };
    const PartnerModel& pm = which == 0 ? sol : osc;
    double prev = 0.0;
    for (int level = 0; level < 3; ++level) {
      const double h = 0.04 / (1 << level);
      // dt ~ h^2 keeps the second-order time error on the same h^4 track as
      // the fourth-order space error, so halving h contracts the residual
      // ~16x, comfortably above the required 4x
      const double dt = 10.0 * h * h;
      double res = 0.0;
      for (auto [x, y] : pts) {
        const Complex td =
            kImagUnit * (kernel(x, y, t0 + dt) - kernel(x, y, t0 - dt)) / (2.0 * dt);
        const Complex lap = (-kernel(x + 2 * h, y, t0) + 16.0 * kernel(x + h, y, t0) -
                             30.0 * kernel(x, y, t0) + 16.0 * kernel(x - h, y, t0) -
                             kernel(x - 2 * h, y, t0)) /
                            (12.0 * h * h);
        const Complex hc = -lap + pm.potential(x) * kernel(x, y, t0);
        res = std::max(res, std::abs(td - hc));
      }
      if (level > 0) min_ratio = std::min(min_ratio, prev / res);
      prev = res;
    }
  }
  return min_ratio;
}

// the dense eigensolve is shared by the two spectrum checks
const std::vector<Complex>& partner_grid_spectrum() {
  static const std::vector<Complex> evals = [] {
    const PartnerModel pm = make_oscillator_partner({0.0, 2.0});
    const Grid1D grid(-12.0, 12.0, 600);
    std::vector<Complex> v(grid.size());
    for (int j = 0; j < grid.size(); ++j) v[j] = pm.potential(grid.point(j));
    return grid_spectrum(v, grid.spacing(), 8);
  }();
  return evals;
}

double acc10a_spectrum_levels(const CheckOptions&) {
  const auto& evals = partner_grid_spectrum();
  double metric = 0.0;
  for (int k = 0; k < 8; ++k)
    metric = std::max(metric, std::abs(evals[k].real() - (-0.5 + k)));
  return metric;
}

double acc10b_spectrum_reality(const CheckOptions&) {
  const auto& evals = partner_grid_spectrum();
  double metric = 0.0;
  for (int k = 0; k < 8; ++k) metric = std::max(metric, std::abs(evals[k].imag()));
  return metric;
}

double acc11_completeness_monotone(const CheckOptions&) {
  const PartnerModel pm = make_oscillator_partner({0.0, 2.0});
  const Grid1D grid(-12.0, 12.0, 961);
  const Packet packet{0.5, 0.9, 0.0};
  const std::vector<Complex> g = sample(grid, packet);
  const double h = grid.spacing();
  const int n = grid.size();

  std::vector<std::vector<Complex>> phi(n);
  for (int j = 0; j < n; ++j) phi[j] = pm.eigenfunctions(63, grid.point(j));
  std::vector<Complex> bound(n);
  for (int j = 0; j < n; ++j) bound[j] = pm.bound(grid.point(j));

  auto reconstruction_error = [&](int terms) {
    std::vector<Complex> coeff(terms, Complex{0.0, 0.0});
    Complex cb{0.0, 0.0};
    for (int j = 0; j < n; ++j) {
      const double wgt = (j == 0 || j == n - 1) ? 0.5 : 1.0;
      for (int m = 0; m < terms; ++m) coeff[m] += wgt * phi[j][m] * g[j];
      cb += wgt * bound[j] * g[j];
    }
    for (auto& c : coeff) c *= h;
    cb *= h;
    double err = 0.0, den = 0.0;
    for (int j = 0; j < n; ++j) {
      Complex acc = cb * bound[j];
      for (int m = 0; m < terms; ++m) acc += coeff[m] * phi[j][m];
      err += std::norm(acc - g[j]);
      den += std::norm(g[j]);
    }
    return std::sqrt(err / den);
  };

  double metric = 0.0;
  double prev = reconstruction_error(8);
  for (int terms : {16, 32, 64}) {
    const double e = reconstruction_error(terms);
    metric = std::max(metric, e / prev);
    prev = e;
  }
  return metric;  // < 1 means the reconstruction error kept shrinking
}

double acc12_soliton_semigroup(const CheckOptions& opts) {
  const PartnerModel pm = make_soliton_partner(1.0, 2.0);
  const auto& sp = std::get<SolitonParams>(pm.fact.params);
  const double t1 = 0.4, t2 = 0.6;
  // The free-free part of the composition integral reproduces the free
  // kernel exactly and is handled in closed form.  The remainder falls off
  // only like a Fresnel-oscillating 1/z (the soliton distorts propagation
  // at all distances), so the window must be wide: the truncated tail is
  // O(1/(alpha R^2)) ~ 6e-7 at R = 250 with alpha = 1/4t1 + 1/4t2.
  QuadratureSpec spec;
  spec.abs_tol = 1e-9;
  spec.rel_tol = 1e-9;
  spec.max_subdivisions = 200000;
  const double window = 250.0;
  const std::vector<std::pair<double, double>> pts = {{0.4, -0.3}, {1.2, 0.5}, {-1.0, 1.3}};
  std::vector<double> diffs(pts.size());
  detail::parallel_for(static_cast<int>(pts.size()), opts.threads, [&](int i) {
    const auto [x, y] = pts[i];
    const Integral rest = integrate(
        [&](double z) {
          const Complex k1 = soliton_kernel_closed(1.0, sp.c, x, z, t1).value;
          const Complex k2 = soliton_kernel_closed(1.0, sp.c, z, y, t2).value;
          return k1 * k2 - free_propagator(x, z, t1) * free_propagator(z, y, t2);
        },
        -window, window, spec);
    const Complex lhs = free_propagator(x, y, t1 + t2) + rest.value;
    const Complex rhs = soliton_kernel_closed(1.0, sp.c, x, y, t1 + t2).value;
    diffs[i] = rest.converged ? std::abs(lhs - rhs) : 1.0;
  });
  return *std::max_element(diffs.begin(), diffs.end());
}

// ---------------------------------------------------------------------------
// module property checks
// ---------------------------------------------------------------------------

double quadrature_reference_integrals(const CheckOptions&) {
  const Integral gauss =
      integrate([](double x) { return Complex(std::exp(-x * x), 0.0); }, -10.0, 10.0, {});
  double metric = std::abs(gauss.value - std::sqrt(M_PI));
  const Complex expo(-1.0, 50.0);
  const Complex exact = (std::exp(expo * 20.0) - 1.0) / expo;
  const Integral osc =
      integrate([&](double x) { return std::exp(expo * x); }, 0.0, 20.0, {});
  metric = std::max(metric, std::abs(osc.value - exact));
  return metric;
}

double specfun_cerf_odd(const CheckOptions& opts) {
  std::mt19937_64 rng(opts.seed);
  std::uniform_real_distribution<double> uni(-3.5, 3.5);
  double metric = 0.0;
  for (int i = 0; i < 100; ++i) {
    const Complex z(uni(rng), uni(rng));
    metric = std::max(metric, std::abs(cerf(z) + cerf(-z)));
  }
  return metric;
}

double specfun_cerf_vs_series(const CheckOptions& opts) {
  // alternating Maclaurin series, an independent route
  auto taylor_erf = [](Complex z) {
    Complex term = z, sum = z;
    for (int k = 1; k < 80; ++k) {
      term *= -z * z / static_cast<double>(k);
      sum += term / static_cast<double>(2 * k + 1);
      if (std::abs(term) < 1e-20 * std::abs(sum)) break;
    }
    return 2.0 / std::sqrt(M_PI) * sum;
  };
  std::mt19937_64 rng(opts.seed + 1);
  // the alternating oracle itself loses digits beyond |z| ~ 3
  std::uniform_real_distribution<double> uni(-1.8, 1.8);
  double metric = 0.0;
  for (int i = 0; i < 50; ++i) {
    const Complex z(uni(rng), uni(rng));
    const Complex ref = taylor_erf(z);
    metric = std::max(metric, std::abs(cerf(z) - ref) / std::max(1.0, std::abs(ref)));
  }
  return metric;
}

double specfun_faddeeva_vs_cf(const CheckOptions& opts) {
  // Laplace continued fraction, accurate at large |z| in the upper
  // half-plane and independent of the rational expansion
  auto cf_w = [](Complex z) {
    Complex r{0.0, 0.0};
    for (int k = 40; k >= 1; --k) r = (0.5 * k) / (z - r);
    return kImagUnit / std::sqrt(M_PI) / (z - r);
  };
  std::mt19937_64 rng(opts.seed + 2);
  std::uniform_real_distribution<double> mod(8.0, 30.0);
  std::uniform_real_distribution<double> arg(0.0, M_PI);
  double metric = 0.0;
  for (int i = 0; i < 50; ++i) {
    const double r = mod(rng), th = arg(rng);
    const Complex z = r * Complex(std::cos(th), std::sin(th));
    const Complex ref = cf_w(z);
    metric = std::max(metric, std::abs(faddeeva_w(z) - ref) / std::abs(ref));
  }
  return metric;
}

double specfun_hermite_recurrence_vs_direct(const CheckOptions&) {
  // explicit polynomial coefficients as the independent evaluation
  auto psi_direct = [](int n, double x) {
    std::vector<std::vector<double>> coef(n + 1);
    coef[0] = {1.0};
    if (n >= 1) coef[1] = {0.0, 2.0};
    for (int k = 2; k <= n; ++k) {
      coef[k].assign(k + 1, 0.0);
      for (int p = 0; p <= k - 1; ++p) coef[k][p + 1] += 2.0 * coef[k - 1][p];
      for (int p = 0; p + 2 <= k; ++p) coef[k][p] -= 2.0 * (k - 1) * coef[k - 2][p];
    }
    const double q = x / std::sqrt(2.0);
    double hval = 0.0;
    for (int p = n; p >= 0; --p) hval = hval * q + coef[n][p];
    double fact = 1.0;
    for (int k = 2; k <= n; ++k) fact *= k;
    return std::pow(2.0, -0.25) * std::pow(M_PI, -0.25) /
           std::sqrt(std::pow(2.0, n) * fact) * hval * std::exp(-0.5 * q * q);
  };
  double metric = 0.0;
  for (int n = 0; n <= 15; ++n) {
    double worst = 0.0, scale = 0.0;
    for (double x : linspace(-8.0, 8.0, 81)) {
      const double direct = psi_direct(n, x);
      scale = std::max(scale, std::abs(direct));
      worst = std::max(worst, std::abs(osc_eigenfunction(n, x) - direct));
    }
    metric = std::max(metric, worst / scale);
  }
  return metric;
}

double specfun_eigen_residual_refinement(const CheckOptions&) {
  double min_ratio = 1e300;
  for (int n : {0, 3, 6}) {
    double prev = 0.0;
    for (int level = 0; level < 2; ++level) {
      const Grid1D grid(-10.0, 10.0, level == 0 ? 1001 : 2001);
      std::vector<Complex> v(grid.size()), psi(grid.size());
      for (int j = 0; j < grid.size(); ++j) {
        v[j] = 0.25 * grid.point(j) * grid.point(j);
        psi[j] = osc_eigenfunction(n, grid.point(j));
      }
      const auto hpsi = apply_h_grid(v, psi, grid.spacing(), 4);
      std::vector<Complex> res(grid.size(), Complex{0.0, 0.0});
      for (int j = 2; j + 2 < grid.size(); ++j) res[j] = hpsi[j] - (n + 0.5) * psi[j];
      const double sup = sup_on(res, grid, 8.0, 2);
      if (level == 1) min_ratio = std::min(min_ratio, prev / sup);
      prev = sup;
    }
  }
  return min_ratio;
}

double model_free_group_property(const CheckOptions&) {
  // contour rotated through the stationary point turns the Fresnel-type
  // composition integral into a Gaussian one
  const double t1 = 0.3, t2 = 0.4;
  auto k0_complex = [](double x, Complex z, double t) {
    const Complex d = x - z;
    return std::exp(kImagUnit * d * d / (4.0 * t)) /
           std::sqrt(4.0 * M_PI * kImagUnit * t);
  };
  double metric = 0.0;
  for (auto [x, y] : std::vector<std::pair<double, double>>{{0.2, -0.5}, {1.0, 0.7}}) {
    const double zstar = (x * t2 + y * t1) / (t1 + t2);
    const Complex dir = std::exp(kImagUnit * (M_PI / 4.0));
    const Integral r = integrate(
        [&](double s) {
          const Complex z = zstar + dir * s;
          return dir * k0_complex(x, z, t1) * k0_complex(y, z, t2);
        },
        -8.0, 8.0, {});
    metric = std::max(metric, std::abs(r.value - free_propagator(x, y, t1 + t2)));
  }
  return metric;
}

double model_osc_eigenphase_evolution(const CheckOptions& opts) {
  const Grid1D grid(-12.0, 12.0, 961);
  std::vector<Complex> psi0(grid.size());
  for (int j = 0; j < grid.size(); ++j) psi0[j] = osc_eigenfunction(0, grid.point(j));
  const double t = 0.7;
  const std::vector<double> xs = linspace(-3.0, 3.0, 9);
  const auto evolved = pair_with_kernel(
      xs, grid, psi0, [&](double x, double y) { return osc_propagator(x, y, t); },
      opts.threads);
  double metric = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i)
    metric = std::max(metric, std::abs(evolved[i] - std::exp(-kImagUnit * 0.5 * t) *
                                                        osc_eigenfunction(0, xs[i])));
  return metric;
}

double model_green_derivative_jump(const CheckOptions&) {
  // d/dx G at x=y+ minus x=y- is -1 for the kernel of (h0 - E)^{-1};
  // second-order one-sided differences
  const double y = 0.4, eps = 1e-4;
  auto g = [&](double x) { return osc_green_neg_half(x, y).real(); };
  const double right = (-3.0 * g(y) + 4.0 * g(y + eps) - g(y + 2 * eps)) / (2.0 * eps);
  const double left = (3.0 * g(y) - 4.0 * g(y - eps) + g(y - 2 * eps)) / (2.0 * eps);
  return std::abs((right - left) - (-1.0));
}

double model_green_spectral_consistency(const CheckOptions&) {
  // sum_m psi_m(x) psi_m(y) / (E_m + 1/2) evaluated through its absolutely
  // convergent integral form int_0^1 M(x,y,s) ds, where M is the generating
  // kernel sum_m psi_m(x) psi_m(y) s^m in closed form.  The raw truncated
  // sum has an oscillatory O(1/M) tail; the unit tests track that trend.
  const double x = 0.5, y = -0.3;
  auto generating = [&](double s) {
    const double q2 = 0.5 * (x * x + y * y);
    const double qq = 0.5 * x * y;
    const double denom = 1.0 - s * s;
    return Complex(std::pow(2.0 * M_PI, -0.5) / std::sqrt(denom) *
                       std::exp((2.0 * qq * s - q2 * s * s) / denom - 0.5 * q2),
                   0.0);
  };
  QuadratureSpec spec;
  spec.abs_tol = 1e-13;
  spec.rel_tol = 1e-12;
  const Integral r = integrate(generating, 0.0, 1.0, spec);
  return std::abs(r.value - osc_green_neg_half(x, y));
}

double model_kernel_symmetry(const CheckOptions& opts) {
  std::mt19937_64 rng(opts.seed + 3);
  std::uniform_real_distribution<double> uni(-4.0, 4.0);
  double metric = 0.0;
  for (int i = 0; i < 20; ++i) {
    const double x = uni(rng), y = uni(rng);
    const double t = 0.2 + 0.125 * i;
    metric =
        std::max(metric, std::abs(free_propagator(x, y, t) - free_propagator(y, x, t)));
    const double tosc = 0.1 + 0.14 * i;
    metric = std::max(metric,
                      std::abs(osc_propagator(x, y, tosc) - osc_propagator(y, x, tosc)));
    metric =
        std::max(metric, std::abs(osc_green_neg_half(x, y) - osc_green_neg_half(y, x)));
    metric = std::max(metric, std::abs(free_green(x, y, {-2.0, 0.0}) -
                                       free_green(y, x, {-2.0, 0.0})));
  }
  return metric;
}

double susy_annihilation(const CheckOptions&) {
  double metric = 0.0;
  for (int which = 0; which < 2; ++which) {
    const PartnerModel pm = which == 0 ? make_oscillator_partner({0.0, 2.0})
                                       : make_soliton_partner(1.0, 2.0);
    const Factorization& f = pm.fact;
    for (double x : linspace(-6.0, 6.0, 41)) {
      const Complex u = f.u(x), du = f.u_prime(x);
      const double scale = std::abs(du) + std::abs(u) + 1.0;
      metric = std::max(metric, std::abs(apply_L(f, u, du, x)) / scale);
      const Complex inv = 1.0 / u, dinv = -du / (u * u);
      metric = std::max(metric, std::abs(apply_Lt(f, inv, dinv, x)) * std::abs(u));
    }
  }
  return metric;
}

double susy_intertwining_refinement(const CheckOptions& opts) {
  std::mt19937_64 rng(opts.seed + 4);
  std::uniform_real_distribution<double> uni(-0.5, 0.5);
  const double c1 = uni(rng), c2 = uni(rng), c3 = uni(rng);
  double min_ratio = 1e300;
  for (int which = 0; which < 2; ++which) {
    const PartnerModel pm = which == 0 ? make_oscillator_partner({0.0, 2.0})
                                       : make_soliton_partner(1.0, 2.0);
    const Factorization& f = pm.fact;
    double prev = 0.0;
    for (int level = 0; level < 2; ++level) {
      const int n = level == 0 ? 801 : 1601;
      const Grid1D grid(-8.0, 8.0, n);
      const double h = grid.spacing();
      std::vector<Complex> g(n), w(n), v0(n), vc(n);
      for (int j = 0; j < n; ++j) {
        const double x = grid.point(j);
        g[j] = (1.0 + c1 * x + c2 * x * x + c3 * x * x * x) * std::exp(-0.3 * x * x);
        w[j] = f.log_derivative(x);
        v0[j] = f.base.potential(x);
        vc[j] = pm.potential(x);
      }
      const auto d2g = d2_4(g, h);
      std::vector<Complex> h0g(n, Complex{0.0, 0.0});
      for (int j = 2; j + 2 < n; ++j) h0g[j] = -d2g[j] + v0[j] * g[j];
      const auto d1h0g = d1_4(h0g, h);
      const auto d1g = d1_4(g, h);
      std::vector<Complex> lg(n, Complex{0.0, 0.0});
      for (int j = 0; j < n; ++j) lg[j] = -w[j] * g[j] + d1g[j];
      const auto d2lg = d2_4(lg, h);
      std::vector<Complex> res(n, Complex{0.0, 0.0});
      for (int j = 6; j + 6 < n; ++j) {
        const Complex l_h0g = -w[j] * h0g[j] + d1h0g[j];
        const Complex hc_lg = -d2lg[j] + vc[j] * lg[j];
        res[j] = l_h0g - hc_lg;
      }
      const double sup = sup_on(res, grid, 6.0, 6);
      if (level == 1) min_ratio = std::min(min_ratio, prev / sup);
      prev = sup;
    }
  }
  return min_ratio;
}

double susy_closed_form_potentials(const CheckOptions& opts) {
  std::mt19937_64 rng(opts.seed + 5);
  std::uniform_real_distribution<double> uni(-6.0, 6.0);
  const Complex cc{0.0, 2.0};
  const PartnerModel osc = make_oscillator_partner(cc);
  const PartnerModel sol = make_soliton_partner(1.0, 2.0);
  const auto& sp = std::get<SolitonParams>(sol.fact.params);
  double metric = 0.0;
  for (int i = 0; i < 50; ++i) {
    const double x = uni(rng);
    // V_c = x^2/4 - 1 + 2 x e^{-x^2/2} / Q1 + 2 e^{-x^2} / Q1^2,
    // Q1 = sqrt(pi/2) (C + erf(x/sqrt2))
    const Complex q1 = std::sqrt(M_PI / 2.0) * (cc + std::erf(x / std::sqrt(2.0)));
    const Complex vref = 0.25 * x * x - 1.0 + 2.0 * x * std::exp(-0.5 * x * x) / q1 +
                         2.0 * std::exp(-x * x) / (q1 * q1);
    metric = std::max(metric,
                      std::abs(osc.potential(x) - vref) / std::max(1.0, std::abs(vref)));
    const Complex ch = std::cosh(sp.a * x + sp.c);
    const Complex vsol = -2.0 * sp.a * sp.a / (ch * ch);
    metric = std::max(metric,
                      std::abs(sol.potential(x) - vsol) / std::max(1.0, std::abs(vsol)));
  }
  return metric;
}

double susy_eigen_residual_refinement(const CheckOptions&) {
  // h0 u = alpha u and h_c phi_alpha = alpha phi_alpha under the 4th-order
  // grid Hamiltonian
  double min_ratio = 1e300;
  for (int which = 0; which < 2; ++which) {
    const PartnerModel pm = which == 0 ? make_oscillator_partner({0.0, 2.0})
                                       : make_soliton_partner(1.0, 2.0);
    const Factorization& f = pm.fact;
    for (int target = 0; target < 2; ++target) {
      double prev = 0.0;
      for (int level = 0; level < 2; ++level) {
        const int n = level == 0 ? 801 : 1601;
        const Grid1D grid(-8.0, 8.0, n);
        std::vector<Complex> v(n), g(n);
        double scale = 0.0;
        for (int j = 0; j < n; ++j) {
          const double x = grid.point(j);
          v[j] = target == 0 ? Complex(f.base.potential(x), 0.0) : pm.potential(x);
          g[j] = target == 0 ? f.u(x) : pm.bound(x);
          scale = std::max(scale, std::abs(g[j]));
        }
        const auto hg = apply_h_grid(v, g, grid.spacing(), 4);
        std::vector<Complex> res(n, Complex{0.0, 0.0});
        for (int j = 2; j + 2 < n; ++j) res[j] = hg[j] - f.alpha * g[j];
        const double sup = sup_on(res, grid, 6.0, 2) / scale;
        if (level == 1) min_ratio = std::min(min_ratio, prev / sup);
        prev = sup;
      }
    }
  }
  return min_ratio;
}

double susy_norm_quadrature_identity(const CheckOptions&) {
  // int u^{-2} dx = sqrt(2 pi) / (C^2 - 1)
  const Complex cc{0.0, 2.0};
  const Factorization f = make_oscillator_transform(cc);
  QuadratureSpec spec;
  spec.truncation_radius = 14.0;
  const Complex val = bilinear_norm([&](double x) { return 1.0 / f.u(x); }, spec);
  const Complex expected = kSqrt2Pi / (cc * cc - 1.0);
  return std::abs(val - expected);
}

double kernel_bound_term_isolation(const CheckOptions& opts) {
  double metric = 0.0;
  const Grid1D grid(-18.0, 18.0, 721);
  for (int which = 0; which < 2; ++which) {
    const PartnerModel pm = which == 0 ? make_oscillator_partner({0.0, 2.0})
                                       : make_soliton_partner(1.0, 2.0);
    const std::vector<Complex> phi_a = sample(grid, [&](double y) { return pm.bound(y); });
    const std::vector<double> xs = {-2.0, 0.0, 1.5};
    const auto paired = pair_with_kernel(
        xs, grid, phi_a,
        [&](double x, double y) { return theorem_kernel_parts(pm, x, y, 0.7).transformed; },
        opts.threads);
    for (const Complex& v : paired) metric = std::max(metric, std::abs(v));
  }
  return metric;
}

double kernel_symmetry_closed(const CheckOptions& opts) {
  const PartnerModel pm = make_soliton_partner(1.0, 2.0);
  const auto& sp = std::get<SolitonParams>(pm.fact.params);
  std::mt19937_64 rng(opts.seed + 6);
  std::uniform_real_distribution<double> uni(-4.0, 4.0);
  double metric = 0.0;
  for (int i = 0; i < 20; ++i) {
    const double x = uni(rng), y = uni(rng), t = 0.2 + 0.1 * i;
    const Complex kxy = soliton_kernel_closed(1.0, sp.c, x, y, t).value;
    const Complex kyx = soliton_kernel_closed(1.0, sp.c, y, x, t).value;
    metric = std::max(metric, std::abs(kxy - kyx));
  }
  return metric;
}

double kernel_symmetry_quadrature(const CheckOptions&) {
  const PartnerModel osc = make_oscillator_partner({0.0, 2.0});
  const PartnerModel sol = make_soliton_partner(1.0, 2.0);
  double metric = 0.0;
  for (auto [x, y] : std::vector<std::pair<double, double>>{{0.7, -1.1}, {-2.0, 0.4}}) {
    metric = std::max(metric, std::abs(theorem_kernel(osc, x, y, 0.7).value -
                                       theorem_kernel(osc, y, x, 0.7).value));
    metric = std::max(metric, std::abs(theorem_kernel(sol, x, y, 0.7).value -
                                       theorem_kernel(sol, y, x, 0.7).value));
    metric = std::max(metric,
                      std::abs(oscillator_kernel_closed({0.0, 2.0}, x, y, 0.7).value -
                               oscillator_kernel_closed({0.0, 2.0}, y, x, 0.7).value));
  }
  return metric;
}

double kernel_short_time_packet(const CheckOptions& opts) {
  // delta-condition continuity at small positive t through the spectral
  // route (the quadrature kernels oscillate too fast in y at t = 0.01 for a
  // sampled pairing to be meaningful)
  const PartnerModel pm = make_oscillator_partner({0.0, 2.0});
  const Grid1D grid(-15.0, 15.0, 601);
  const Packet packet{1.0, 1.0, 0.0};
  const std::vector<Complex> phi0 = sample(grid, packet);
  const auto evolved = propagate_state(KernelMethod::SpectralSum, pm, grid, phi0, 0.01,
                                       {}, 96, opts.threads);
  return l2_rel(evolved, phi0);
}

double kernel_free_base_gaussian(const CheckOptions& opts) {
  const BaseProblem base = BaseProblem::free_particle();
  const Grid1D grid(-40.0, 40.0, 2001);
  const Packet packet{0.0, 1.0, 0.5};
  const std::vector<Complex> phi0 = sample(grid, packet);
  const double t = 1.0;
  const auto evolved = propagate_state_base(base, grid, phi0, t, opts.threads);
  double num = 0.0, den = 0.0;
  for (int j = 0; j < grid.size(); ++j) {
    const Complex exact = free_gaussian(packet, grid.point(j), t);
    num += std::norm(evolved[j] - exact);
    den += std::norm(exact);
  }
  return std::sqrt(num / den);
}

double oracle_cn_unitarity_real_potential(const CheckOptions&) {
  const Grid1D grid(-20.0, 20.0, 1201);
  std::vector<Complex> v(grid.size());
  for (int j = 0; j < grid.size(); ++j) v[j] = 0.25 * grid.point(j) * grid.point(j);
  const Packet packet{0.5, 1.0, 0.4};
  const std::vector<Complex> phi0 = sample(grid, packet);
  EvolutionConfig cfg{grid, 1e-3, 200, 1e-6};
  const auto phi = cn_evolve(v, phi0, cfg);
  const double n0 = sampled_norm(std::span<const Complex>(phi0), grid.spacing());
  const double n1 = sampled_norm(std::span<const Complex>(phi), grid.spacing());
  return std::abs(n1 - n0) / n0;
}

double oracle_cn_free_gaussian(const CheckOptions&) {
  // spreading of a stationary Gaussian; the moving-packet variant lives in
  // kernel_free_base_gaussian where the evolution is quadrature-exact
  const Grid1D grid(-40.0, 40.0, 4097);
  const Packet packet{0.0, 1.5, 0.0};
  std::vector<Complex> v(grid.size(), Complex{0.0, 0.0});
  const std::vector<Complex> phi0 = sample(grid, packet);
  const double t = 1.0;
  const auto phi = cn_evolve(v, phi0, make_evolution_config(grid, t, 5e-4));
  std::vector<Complex> exact(grid.size());
  for (int j = 0; j < grid.size(); ++j) exact[j] = free_gaussian(packet, grid.point(j), t);
  return l2_rel(phi, exact);
}

double oracle_cn_osc_eigenphase(const CheckOptions&) {
  const Grid1D grid(-40.0, 40.0, 4097);
  std::vector<Complex> v(grid.size()), psi0(grid.size());
  for (int j = 0; j < grid.size(); ++j) {
    v[j] = 0.25 * grid.point(j) * grid.point(j);
    psi0[j] = osc_eigenfunction(0, grid.point(j));
  }
  const double t = 1.0;
  const auto phi = cn_evolve(v, psi0, make_evolution_config(grid, t, 5e-4));
  Complex overlap{0.0, 0.0};
  double den = 0.0;
  for (int j = 0; j < grid.size(); ++j) {
    overlap += std::conj(psi0[j]) * phi[j];
    den += std::norm(psi0[j]);
  }
  overlap /= den;
  return std::abs(std::arg(overlap) - (-0.5 * t));
}

double oracle_cn_soliton_eigenphase(const CheckOptions&) {
  const PartnerModel pm = make_soliton_partner(1.0, 2.0);
  const Grid1D grid(-30.0, 30.0, 3001);
  const std::vector<Complex> v = sample_potential(pm, grid);
  const std::vector<Complex> phi0 = sample(grid, [&](double x) { return pm.bound(x); });
  const double t = 1.0;
  const auto phi = cn_evolve(v, phi0, make_evolution_config(grid, t, 5e-4));
  std::vector<Complex> exact(grid.size());
  const Complex phase = std::exp(-kImagUnit * pm.fact.alpha * t);
  for (int j = 0; j < grid.size(); ++j) exact[j] = phase * phi0[j];
  return l2_rel(phi, exact);
}

double oracle_bilinear_coefficient_modulus(const CheckOptions&) {
  // real spectrum: the bilinear expansion coefficients of a CN-evolved
  // packet only rotate in phase; the moduli are conserved even though the
  // usual L2 norm is not a conserved quantity for complex potentials
  const PartnerModel pm = make_oscillator_partner({0.0, 2.0});
  const Grid1D grid(-15.0, 15.0, 2401);
  const Packet packet{1.0, 1.0, 0.0};
  const std::vector<Complex> phi0 = sample(grid, packet);
  const double t = 0.7;
  const auto phi =
      cn_evolve(sample_potential(pm, grid), phi0, make_evolution_config(grid, t, 5e-4));
  const double h = grid.spacing();
  double metric = 0.0;
  for (int n = 0; n <= 5; ++n) {
    Complex c0{0.0, 0.0}, ct{0.0, 0.0};
    for (int j = 0; j < grid.size(); ++j) {
      const double wgt = (j == 0 || j == grid.size() - 1) ? 0.5 : 1.0;
      const Complex phin = pm.eigenfunction(n, grid.point(j));
      c0 += wgt * phin * phi0[j];
      ct += wgt * phin * phi[j];
    }
    c0 *= h;
    ct *= h;
    // absolute drift; the unit-normalized packet keeps every |c_n| <= O(1)
    metric = std::max(metric, std::abs(std::abs(ct) - std::abs(c0)));
  }
  return metric;
}

// ---------------------------------------------------------------------------
// registry
// ---------------------------------------------------------------------------

enum class Direction { Below, Above };

struct Registered {
  const char* name;
  double tolerance;
  Direction dir;
  double (*metric)(const CheckOptions&);
};

const std::vector<Registered>& registry() {
  static const std::vector<Registered> checks = {
      {"acc01_soliton_closed_vs_theorem", 1e-6, Direction::Below,
       acc01_soliton_closed_vs_theorem},
      {"acc02_oscillator_packet_three_way", 1e-3, Direction::Below,
       acc02_oscillator_packet_three_way},
      {"acc03_bound_state_phase", 1e-5, Direction::Below, acc03_bound_state_phase},
      {"acc04a_bilinear_norm_oscillator", 1e-8, Direction::Below,
       acc04a_bilinear_norm_oscillator},
      {"acc04b_bilinear_norm_soliton", 1e-10, Direction::Below,
       acc04b_bilinear_norm_soliton},
      {"acc05_bilinear_orthonormality", 1e-8, Direction::Below,
       acc05_bilinear_orthonormality},
      {"acc06_factorization_identities", 12.0, Direction::Above,
       acc06_factorization_identities},
      {"acc07_intertwining_evolution", 1e-5, Direction::Below,
       acc07_intertwining_evolution},
      {"acc08_wronskian_constancy", 1e-10, Direction::Below, acc08_wronskian_constancy},
      {"acc09_pde_residual", 4.0, Direction::Above, acc09_pde_residual},
      {"acc10a_spectrum_levels", 1e-3, Direction::Below, acc10a_spectrum_levels},
      {"acc10b_spectrum_reality", 1e-6, Direction::Below, acc10b_spectrum_reality},
      {"acc11_completeness_monotone", 1.0, Direction::Below, acc11_completeness_monotone},
      {"acc12_soliton_semigroup", 1e-5, Direction::Below, acc12_soliton_semigroup},
      {"quadrature_reference_integrals", 1e-12, Direction::Below,
       quadrature_reference_integrals},
      {"specfun_cerf_odd", 1e-13, Direction::Below, specfun_cerf_odd},
      {"specfun_cerf_vs_series", 1e-12, Direction::Below, specfun_cerf_vs_series},
      {"specfun_faddeeva_vs_cf", 1e-12, Direction::Below, specfun_faddeeva_vs_cf},
      {"specfun_hermite_recurrence_vs_direct", 1e-10, Direction::Below,
       specfun_hermite_recurrence_vs_direct},
      {"specfun_eigen_residual_refinement", 12.0, Direction::Above,
       specfun_eigen_residual_refinement},
      {"model_free_group_property", 1e-6, Direction::Below, model_free_group_property},
      {"model_osc_eigenphase_evolution", 1e-8, Direction::Below,
       model_osc_eigenphase_evolution},
      {"model_green_derivative_jump", 1e-6, Direction::Below, model_green_derivative_jump},
      {"model_green_spectral_consistency", 1e-6, Direction::Below,
       model_green_spectral_consistency},
      {"model_kernel_symmetry", 1e-13, Direction::Below, model_kernel_symmetry},
      {"susy_annihilation", 1e-12, Direction::Below, susy_annihilation},
      {"susy_intertwining_refinement", 12.0, Direction::Above,
       susy_intertwining_refinement},
      {"susy_closed_form_potentials", 1e-10, Direction::Below, susy_closed_form_potentials},
      {"susy_eigen_residual_refinement", 12.0, Direction::Above,
       susy_eigen_residual_refinement},
      {"susy_norm_quadrature_identity", 1e-8, Direction::Below,
       susy_norm_quadrature_identity},
      {"kernel_bound_term_isolation", 1e-5, Direction::Below, kernel_bound_term_isolation},
      {"kernel_symmetry_closed", 1e-12, Direction::Below, kernel_symmetry_closed},
      {"kernel_symmetry_quadrature", 1e-7, Direction::Below, kernel_symmetry_quadrature},
      {"kernel_short_time_packet", 0.02, Direction::Below, kernel_short_time_packet},
      {"kernel_free_base_gaussian", 1e-8, Direction::Below, kernel_free_base_gaussian},
      {"oracle_cn_unitarity_real_potential", 1e-12, Direction::Below,
       oracle_cn_unitarity_real_potential},
      {"oracle_cn_free_gaussian", 1e-4, Direction::Below, oracle_cn_free_gaussian},
      {"oracle_cn_osc_eigenphase", 1e-4, Direction::Below, oracle_cn_osc_eigenphase},
      {"oracle_cn_soliton_eigenphase", 1e-4, Direction::Below,
       oracle_cn_soliton_eigenphase},
      {"oracle_bilinear_coefficient_modulus", 1e-4, Direction::Below,
       oracle_bilinear_coefficient_modulus},
  };
  return checks;
}

}  // namespace

std::vector<std::string> check_names() {
  std::vector<std::string> names;
  for (const auto& c : registry()) names.emplace_back(c.name);
  return names;
}

std::vector<CheckResult> run_checks(const std::string& name_filter,
                                    const CheckOptions& opts) {
  std::vector<CheckResult> results;
  for (const auto& c : registry()) {
    const std::string name(c.name);
    if (!name_filter.empty() && name.find(name_filter) == std::string::npos) continue;
    double tol = c.tolerance;
    if (auto it = opts.tolerance_overrides.find(name); it != opts.tolerance_overrides.end())
      tol = it->second;
    const auto start = std::chrono::steady_clock::now();
    const double metric = c.metric(opts);
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool pass = c.dir == Direction::Below ? metric <= tol : metric >= tol;
    results.push_back({name, metric, tol, pass, seconds});
  }
  return results;
}

}  // namespace susyprop
