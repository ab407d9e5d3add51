#pragma once

#include <span>
#include <vector>

#include "susyprop/types.hpp"

namespace susyprop {

struct EvolutionConfig {
  Grid1D grid;
  double dt = 1e-3;
  int n_steps = 0;
  // evolution aborts if boundary amplitude exceeds this fraction of the
  // state maximum (the grid was too small for the run)
  double boundary_cap = 1e-6;
};

// n_steps chosen so that n_steps * dt == t_final exactly, rounding dt down
// from the request; cross-method comparisons then need no interpolation.
EvolutionConfig make_evolution_config(const Grid1D& grid, double t_final,
                                      double dt_request, double boundary_cap = 1e-6);

// (h g)_j = -(laplacian g)_j + V_j g_j with a central stencil of the given
// order (2 or 4).  The stencil skirt (1 or 2 points per side) is left zero;
// residual tests mask it.
std::vector<Complex> apply_h_grid(std::span<const Complex> V,
                                  std::span<const Complex> g, double h, int order);

// Crank-Nicolson for i dPhi/dt = h Phi with a (possibly complex) sampled
// potential: (1 + i dt/2 h) Phi_{k+1} = (1 - i dt/2 h) Phi_k, Dirichlet
// ends, tridiagonal Thomas solves.  Deterministic for fixed inputs.
// Throws DomainTooSmallError if the boundary cap is exceeded mid-run.
std::vector<Complex> cn_evolve(std::span<const Complex> V,
                               std::span<const Complex> phi0,
                               const EvolutionConfig& cfg);

// Lowest eigenvalues (sorted by real part) of the grid Hamiltonian
// -d^2/dx^2 + V on the interior points, discretized with the Numerov-type
// tridiagonal pair A psi = E B psi (4th-order eigenvalues), solved densely.
std::vector<Complex> grid_spectrum(std::span<const Complex> V, double h, int n_lowest);

}  // namespace susyprop
