#include "pdm/analytic.hpp"

#include <cmath>

#include "pdm/errors.hpp"

namespace pdm {

namespace {

double require_real_nu(const OrderingParams& ordering) {
  const AmbiguityReport report = nu_value(ordering);
  if (!report.real()) {
    throw ComplexOrdering("nu^2 = " + std::to_string(report.nu_squared) +
                          " < 0: ordering yields complex energies");
  }
  return *report.nu;
}

void require_well(const SystemConfig& sys) {
  sys.validate();
  if (sys.V0 <= 0) throw NoBoundStates("V0 <= 0: no confining well, no discrete spectrum");
}

}  // namespace

MorseReduction morse_reduction(const SystemConfig& sys, const OrderingParams& ordering) {
  sys.validate();
  require_real_nu(ordering);
  const double q = q_value(ordering, sys);
  MorseReduction red;
  red.epsilon = sys.hbar * sys.hbar / sys.m0 * (q - sys.c * sys.c / 8.0);
  red.quadratic_strength = sys.V0;
  red.weight_exponent = sys.c;
  return red;
}

Spectrum morse_spectrum(const SystemConfig& sys, const OrderingParams& ordering, int n_max) {
  const double nu = require_real_nu(ordering);
  require_well(sys);
  if (n_max < 0) throw InvalidConfig("n_max must be >= 0");

  const double scale = sys.hbar * std::abs(sys.c) * std::sqrt(sys.V0 / (2.0 * sys.m0));
  Spectrum spec;
  spec.nu = nu;
  spec.kappa = sys.kappa();
  spec.route = SpectrumRoute::morse;
  spec.marginal_branch = nu == 0.0;
  spec.levels.reserve(n_max + 1);
  for (int n = 0; n <= n_max; ++n) {
    spec.levels.push_back({n, scale * (2.0 * n + 1.0 + nu)});
  }
  return spec;
}

OscillatorMap oscillator_map(const SystemConfig& sys, const OrderingParams& ordering) {
  sys.validate();
  const double nu = require_real_nu(ordering);
  if (sys.V0 <= 0) throw NoBoundStates("V0 <= 0: oscillator map undefined");
  OscillatorMap map;
  map.omega = 2.0 / std::abs(sys.c) * std::sqrt(2.0 * sys.V0 / sys.m0);
  map.l_effective = nu - 0.5;
  map.energy_rescale = 4.0 / (sys.c * sys.c);
  return map;
}

Spectrum oscillator_spectrum(const SystemConfig& sys, const OrderingParams& ordering, int n_max) {
  const double nu = require_real_nu(ordering);
  require_well(sys);
  if (n_max < 0) throw InvalidConfig("n_max must be >= 0");

  const OscillatorMap map = oscillator_map(sys, ordering);
  Spectrum spec;
  spec.nu = nu;
  spec.kappa = sys.kappa();
  spec.route = SpectrumRoute::oscillator;
  spec.marginal_branch = nu == 0.0;
  spec.levels.reserve(n_max + 1);
  for (int n = 0; n <= n_max; ++n) {
    const double radial = sys.hbar * map.omega * (2.0 * n + map.l_effective + 1.5);
    spec.levels.push_back({n, radial / map.energy_rescale});
  }
  return spec;
}

double ground_state_peak(const SystemConfig& sys) {
  require_well(sys);
  const double amp = std::sqrt(2.0 * sys.m0 * sys.V0) / (sys.hbar * std::abs(sys.c));
  // d/dx [cx/2 - amp e^{cx}] = 0  =>  e^{c x*} = 1 / (2 amp)
  return std::log(1.0 / (2.0 * amp)) / sys.c;
}

GridFunction ground_state_closed_form(const SystemConfig& sys, const Grid& grid) {
  require_well(sys);
  const double amp = std::sqrt(2.0 * sys.m0 * sys.V0) / (sys.hbar * std::abs(sys.c));

  GridFunction psi = sample(
      [&](double x) { return std::exp(0.5 * sys.c * x - amp * std::exp(sys.c * x)); }, grid);

  const double peak = psi.max_abs();
  const int n = grid.size();
  if (std::abs(psi.values[0]) > 1e-6 * peak || std::abs(psi.values[n - 1]) > 1e-6 * peak) {
    throw DomainTooSmall("ground state does not decay to 1e-6 of its peak at the grid ends");
  }

  const double norm = psi.norm();
  for (double& v : psi.values) v /= norm;
  return psi;
}

}  // namespace pdm
