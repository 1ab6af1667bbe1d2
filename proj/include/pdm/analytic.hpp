#pragma once

#include <vector>

#include "pdm/ambiguity.hpp"
#include "pdm/grid.hpp"
#include "pdm/ordering.hpp"
#include "pdm/system.hpp"

namespace pdm {

enum class SpectrumRoute { morse, oscillator, numeric };

struct SpectrumLevel {
  int n;
  double energy;
};

/// Discrete levels E_n = kappa (2n + 1 + nu) with provenance. For nu = 0 the
/// quantization bracket sits exactly at zero (marginal in the constant-mass
/// variables but normalizable in the weighted norm); marginal_branch records
/// that.
struct Spectrum {
  std::vector<SpectrumLevel> levels;
  double nu = 0;
  double kappa = 0;  // hbar |c| sqrt(V0 / (2 m0))
  SpectrumRoute route = SpectrumRoute::morse;
  bool marginal_branch = false;  // nu == 0 tower
};

/// Coefficients of the constant-mass equation obtained by multiplying the
/// symmetrized problem through by m/m0: the e^{2cx} strength is V0, the
/// eigenvalue E migrates into the e^{cx} coefficient, and the fixed
/// right-hand side is epsilon = (hbar^2/m0)(q - c^2/8) = -hbar^2 c^2 nu^2 / (8 m0).
struct MorseReduction {
  double epsilon;
  double quadratic_strength;  // V0
  double weight_exponent;     // c
};

/// The y = e^{cx/2} change of variables: a radial oscillator with frequency
/// omega = (2/|c|) sqrt(2 V0 / m0), barrier index l = nu - 1/2 (so
/// (l + 1/2)^2 = nu^2), and eigenvalue rescale Etilde = (4/c^2) E.
struct OscillatorMap {
  double omega;
  double l_effective;
  double energy_rescale;  // 4 / c^2
};

MorseReduction morse_reduction(const SystemConfig& sys, const OrderingParams& ordering);

/// Levels from the constant-mass route. The quantization quadratic has roots
/// kappa (2n + 1 +- nu); the minus branch makes the pre-squaring
/// normalizability bracket negative and is rejected. The tower has no
/// truncation: the bracket nu/2 does not depend on n.
Spectrum morse_spectrum(const SystemConfig& sys, const OrderingParams& ordering, int n_max);

OscillatorMap oscillator_map(const SystemConfig& sys, const OrderingParams& ordering);

/// Independent second route through the radial-oscillator form. Must agree
/// with morse_spectrum level by level.
Spectrum oscillator_spectrum(const SystemConfig& sys, const OrderingParams& ordering, int n_max);

/// The nu = 0 ground state in the original wavefunction space,
///   psi0(x) = exp[ c x / 2 - sqrt(2 m0 V0) / (hbar |c|) e^{cx} ],
/// sampled and normalized to unit discrete L2 norm. Throws DomainTooSmall if
/// either grid end carries more than 1e-6 of the peak value.
GridFunction ground_state_closed_form(const SystemConfig& sys, const Grid& grid);

/// Location of the single interior maximum of psi0: e^{c x*} = hbar |c| / (2 sqrt(2 m0 V0)).
double ground_state_peak(const SystemConfig& sys);

}  // namespace pdm
