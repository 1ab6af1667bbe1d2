#pragma once

#include "pdm/grid.hpp"
#include "pdm/system.hpp"

namespace pdm {

/// Two-exponential superpotential W = w_plus e^{cx/2} + w_minus e^{-cx/2}
/// factorizing the nu = 0 Hamiltonian family, with factorization energy E0.
/// Matching W^2 - (gW)' to V + U_{nu=0} - E0 forces
///   w_plus  = sqrt(V0)               (e^{cx} coefficient),
///   w_minus = -hbar |c| / (2 sqrt(2 m0))   (double root of the e^{-cx} quadratic),
///   E0      = -2 w_plus w_minus = kappa.
/// For c < 0 the coefficients refer to the mirrored orientation x -> -x;
/// every evaluation below carries the orientation sign internally.
struct Superpotential {
  double w_plus;
  double w_minus;
  double E0;
};

/// The derivative weight g = hbar / sqrt(2 m(x)) with its exact derivatives;
/// for the exponential profile g' = -(c/2) g and g'' = (c^2/4) g.
struct KineticWeight {
  double g;
  double d1;
  double d2;
};

Superpotential solve_superpotential(const SystemConfig& sys);

KineticWeight kinetic_weight(const SystemConfig& sys, double x);

double superpotential_value(const Superpotential& sp, const SystemConfig& sys, double x);

/// V1 = W^2 - (gW)' (first-partner bracket), evaluated from the solved
/// coefficients: the product gW = g0 (w_plus + w_minus e^{-cx}) differentiates
/// exactly. Satisfies V1 + E0 = V + U_{nu=0} pointwise.
double partner_potential_1(const Superpotential& sp, const SystemConfig& sys, double x);

/// V2 = W^2 + gW' - g'W - gg'' (the operator-algebra expansion of A Adag);
/// collapses identically to the bare potential V0 e^{cx}.
double partner_potential_2(const Superpotential& sp, const SystemConfig& sys, double x);

/// Discrete actions of the factorization operators on original-space
/// wavefunctions: A f = g f' + W f and Adag f = -(g f)' + W f, with central
/// differences in the interior and second-order one-sided stencils at the
/// ends. The derivative in Adag acts on the sampled product g f.
GridFunction apply_A(const GridFunction& f, const SystemConfig& sys);
GridFunction apply_Adag(const GridFunction& f, const SystemConfig& sys);

}  // namespace pdm
