#pragma once

namespace pdm {

/// Physical constants plus the exponential grading parameters:
///   m(x) = m0 e^{cx},  V(x) = V0 e^{cx}.
/// hbar, m0 and c are validated by validate(); V0 is only required to be
/// positive where bound states are requested (those operations throw
/// NoBoundStates otherwise).
struct SystemConfig {
  double hbar = 1.0;
  double m0 = 1.0;
  double c = 1.0;   // grading rate, 1/length
  double V0 = 1.0;  // potential strength

  /// Throws InvalidConfig unless hbar > 0, m0 > 0, c != 0 and all finite.
  void validate() const;

  /// The spectral scale hbar |c| sqrt(V0 / (2 m0)); requires V0 > 0.
  double kappa() const;
};

}  // namespace pdm
