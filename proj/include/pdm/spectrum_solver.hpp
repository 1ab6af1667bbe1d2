#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "pdm/ambiguity.hpp"
#include "pdm/analytic.hpp"
#include "pdm/grid.hpp"
#include "pdm/ordering.hpp"
#include "pdm/system.hpp"
#include "pdm/tridiagonal.hpp"

namespace pdm {

constexpr std::uint64_t kDefaultSeed = 12345;

/// Symmetric-definite reduction of the mass-weighted problem. The continuum
/// equation -(hbar^2/2m) phi'' + U_eff phi = E phi is multiplied by m and
/// discretized with central second differences, giving A phi = E diag(m) phi;
/// the congruent symmetric form T = D^{-1/2} A D^{-1/2} has
///   diag[i]    = hbar^2 / (m_i h^2) + U_eff(x_i)
///   offdiag[i] = -hbar^2 / (2 h^2 sqrt(m_i m_{i+1}))
/// and shares the generalized eigenvalues. T's eigenvectors are the
/// weighted-space vectors u = D^{1/2} phi, i.e. the original psi = sqrt(m) phi.
///
/// Boundary rows: ends are Dirichlet (implicit zero) unless marked natural,
/// in which case the mirror-ghost zero-slope row halves the kinetic diagonal:
/// diag[end] = hbar^2 / (2 m h^2) + U_eff.
struct TridiagonalSystem {
  std::vector<double> diag;
  std::vector<double> offdiag;
  Grid grid;
  std::vector<double> weight;  // mass samples m_i
};

struct BoundaryConditions {
  bool left_natural = false;   // zero-slope instead of implicit zero
  bool right_natural = false;
};

/// Assemble from arbitrary pointwise mass/potential samples (used for
/// self-tests with constant mass as well as the physical profile).
TridiagonalSystem assemble_tridiagonal(const Grid& grid, double hbar,
                                       const std::function<double(double)>& mass,
                                       const std::function<double(double)>& u_eff,
                                       const BoundaryConditions& bc = {});

/// Physical assembly for a Real-classified ordering; throws ComplexOrdering
/// otherwise. The end where the mass vanishes gets the natural (zero-slope)
/// row: the nu = 0 towers are marginal there (phi tends to a constant, with
/// exponentially small slope), and a hard zero would converge to the true
/// spectrum only like 1/|x_min|. The zero-slope row is exact to the profile's
/// decay, so domain truncation stays at the 1e-8 level on the default grids.
/// The potential-wall end keeps the implicit Dirichlet zero.
TridiagonalSystem discretize(const SystemConfig& sys, const OrderingParams& ordering,
                             const Grid& grid);

/// The k smallest generalized eigenvalues of the assembled system.
std::vector<double> eigenvalues(const TridiagonalSystem& t, int k, double tol_scale = 1e-10);

/// Eigenvector for a converged eigenvalue, as the original-space psi with
/// unit discrete L2 norm (equals unit weighted norm of phi = psi / sqrt(m));
/// sign fixed so the first nonzero component is positive.
GridFunction eigenvector(const TridiagonalSystem& t, double energy,
                         std::uint64_t seed = kDefaultSeed);

struct NumericLevel {
  int n;
  double energy;          // Richardson-extrapolated from the h and h/2 runs
  double error_estimate;  // |E(h/2) - E(h)| / 3 plus the bisection width
  double energy_h;        // raw value at the requested grid
  double energy_h2;       // raw value at halved spacing
};

struct GridReport {
  double boundary_shift = 0;        // max eigenvalue move for the 10% inward x_min probe
  bool boundary_sensitive = false;  // shift above 1e-8
  bool clustered = false;           // a gap survived the 1e-12 re-bisection
  std::uint64_t seed = 0;
};

struct NumericSpectrum {
  std::vector<NumericLevel> levels;
  std::vector<GridFunction> wavefunctions_phi;  // phi = psi / sqrt(m)
  std::vector<GridFunction> wavefunctions_psi;  // unit discrete L2 norm
  GridReport grid_report;
};

/// Full pipeline: discretize -> bisection eigenvalues at h and h/2 ->
/// Richardson refinement -> inverse-iteration eigenvectors on the requested
/// grid -> boundary-sensitivity probe (x_min moved 10% inward at fixed
/// spacing).
NumericSpectrum solve_spectrum(const SystemConfig& sys, const OrderingParams& ordering,
                               const Grid& grid, int k, std::uint64_t seed = kDefaultSeed);

struct ConvergenceRow {
  int n;
  double e_h, e_h2, e_h4;
  double observed_order;  // log2(|e_h - e_h2| / |e_h2 - e_h4|)
  double richardson;      // extrapolated from the (h, h/2) pair
};

/// Eigenvalues at h, h/2, h/4 with the observed convergence order per level
/// (central differences: expected ~2).
std::vector<ConvergenceRow> convergence_study(const SystemConfig& sys,
                                              const OrderingParams& ordering,
                                              const Grid& base_grid, int k);

/// True if any adjacent pair in `levels` is closer than gap_tol; used to
/// separate genuine clusters from grid artifacts after re-bisection.
bool has_cluster(const std::vector<double>& levels, double gap_tol);

}  // namespace pdm
