#include "susyprop/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <stdexcept>

#include <Eigen/Dense>

namespace susyprop {

EvolutionConfig make_evolution_config(const Grid1D& grid, double t_final,
                                      double dt_request, double boundary_cap) {
  if (!(t_final > 0.0) || !(dt_request > 0.0))
    throw std::invalid_argument("make_evolution_config: t and dt must be positive");
  const int n_steps = std::max(1, static_cast<int>(std::ceil(t_final / dt_request - 1e-12)));
  return EvolutionConfig{grid, t_final / n_steps, n_steps, boundary_cap};
}

std::vector<Complex> apply_h_grid(std::span<const Complex> V,
                                  std::span<const Complex> g, double h, int order) {
  if (V.size() != g.size())
    throw GridMismatchError("apply_h_grid: potential and state sizes differ");
  if (order != 2 && order != 4)
    throw std::invalid_argument("apply_h_grid: stencil order must be 2 or 4");
  const int n = static_cast<int>(g.size());
  std::vector<Complex> out(n, Complex{0.0, 0.0});
  const double inv_h2 = 1.0 / (h * h);
  if (order == 2) {
    for (int j = 1; j + 1 < n; ++j) {
      const Complex lap = (g[j + 1] - 2.0 * g[j] + g[j - 1]) * inv_h2;
      out[j] = -lap + V[j] * g[j];
    }
  } else {
    for (int j = 2; j + 2 < n; ++j) {
      const Complex lap = (-g[j + 2] + 16.0 * g[j + 1] - 30.0 * g[j] +
                           16.0 * g[j - 1] - g[j - 2]) *
                          (inv_h2 / 12.0);
      out[j] = -lap + V[j] * g[j];
    }
  }
  return out;
}

namespace {

// Thomas elimination for a complex tridiagonal system with constant
// off-diagonals; diagonal dominance is asserted at setup, so no pivoting.
void thomas_solve(const std::vector<Complex>& diag, Complex off,
                  std::vector<Complex>& rhs, std::vector<Complex>& scratch) {
  const int n = static_cast<int>(diag.size());
  scratch[0] = off / diag[0];
  rhs[0] /= diag[0];
  for (int i = 1; i < n; ++i) {
    const Complex denom = diag[i] - off * scratch[i - 1];
    scratch[i] = off / denom;
    rhs[i] = (rhs[i] - off * rhs[i - 1]) / denom;
  }
  for (int i = n - 2; i >= 0; --i) rhs[i] -= scratch[i] * rhs[i + 1];
}

}  // namespace

std::vector<Complex> cn_evolve(std::span<const Complex> V,
                               std::span<const Complex> phi0,
                               const EvolutionConfig& cfg) {
  const int n = cfg.grid.size();
  if (static_cast<int>(V.size()) != n || static_cast<int>(phi0.size()) != n)
    throw GridMismatchError("cn_evolve: sizes do not match the grid");
  if (cfg.n_steps < 1) throw std::invalid_argument("cn_evolve: n_steps must be >= 1");
  const double h = cfg.grid.spacing();
  const double dt = cfg.dt;

  double v_max = 0.0;
  for (const Complex& v : V) v_max = std::max(v_max, std::abs(v));
  if (dt * v_max > 0.25)
    std::fprintf(stderr,
                 "cn_evolve: warning: dt * max|V| = %.3g exceeds the accuracy "
                 "guideline\n",
                 dt * v_max);

  // interior system: (1 + i dt/2 h) acting on points 1..n-2
  const int m = n - 2;
  const Complex half_step = kImagUnit * (0.5 * dt);
  const Complex off_h = Complex{-1.0 / (h * h), 0.0};
  std::vector<Complex> diag_a(m), diag_b(m);
  for (int j = 0; j < m; ++j) {
    const Complex hj = 2.0 / (h * h) + V[j + 1];
    diag_a[j] = 1.0 + half_step * hj;
    diag_b[j] = 1.0 - half_step * hj;
  }
  const Complex off_a = half_step * off_h;
  const Complex off_b = -half_step * off_h;
  for (int j = 0; j < m; ++j) {
    if (std::abs(diag_a[j]) <= 2.0 * std::abs(off_a))
      throw Error("cn_evolve: tridiagonal system is not diagonally dominant");
  }

  std::vector<Complex> phi(phi0.begin(), phi0.end());
  phi.front() = phi.back() = Complex{0.0, 0.0};
  std::vector<Complex> rhs(m), scratch(m);

  const int guard = std::max(1, n / 100);
  for (int step = 0; step < cfg.n_steps; ++step) {
    for (int j = 0; j < m; ++j) {
      Complex r = diag_b[j] * phi[j + 1];
      if (j > 0) r += off_b * phi[j];
      if (j + 1 < m) r += off_b * phi[j + 2];
      rhs[j] = r;
    }
    thomas_solve(diag_a, off_a, rhs, scratch);
    for (int j = 0; j < m; ++j) phi[j + 1] = rhs[j];

    double peak = 0.0, edge = 0.0;
    for (int j = 0; j < n; ++j) peak = std::max(peak, std::abs(phi[j]));
    for (int j = 0; j <= guard; ++j)
      edge = std::max({edge, std::abs(phi[j]), std::abs(phi[n - 1 - j])});
    if (edge > cfg.boundary_cap * peak)
      throw DomainTooSmallError("cn_evolve: boundary amplitude exceeded the cap");
  }
  return phi;
}

std::vector<Complex> grid_spectrum(std::span<const Complex> V, double h, int n_lowest) {
  const int n = static_cast<int>(V.size());
  const int m = n - 2;  // Dirichlet interior
  if (m < n_lowest) throw std::invalid_argument("grid_spectrum: grid too small");

  using Mat = Eigen::MatrixXcd;
  Mat a = Mat::Zero(m, m);
  Mat b = Mat::Zero(m, m);
  const double inv_h2 = 1.0 / (h * h);
  for (int j = 0; j < m; ++j) {
    a(j, j) = 2.0 * inv_h2 + (10.0 / 12.0) * V[j + 1];
    b(j, j) = 10.0 / 12.0;
    if (j + 1 < m) {
      a(j, j + 1) = -inv_h2 + (1.0 / 12.0) * V[j + 2];
      a(j + 1, j) = -inv_h2 + (1.0 / 12.0) * V[j + 1];
      b(j, j + 1) = 1.0 / 12.0;
      b(j + 1, j) = 1.0 / 12.0;
    }
  }

  const Mat m_eff = b.partialPivLu().solve(a);
  Eigen::ComplexEigenSolver<Mat> solver(m_eff, /*computeEigenvectors=*/false);
  if (solver.info() != Eigen::Success)
    throw Error("grid_spectrum: eigensolver did not converge");

  std::vector<Complex> evals(solver.eigenvalues().data(),
                             solver.eigenvalues().data() + m);
  std::sort(evals.begin(), evals.end(),
            [](const Complex& l, const Complex& r) { return l.real() < r.real(); });
  evals.resize(n_lowest);
  return evals;
}

}  // namespace susyprop
