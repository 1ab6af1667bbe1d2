#pragma once

#include "pdm/system.hpp"

namespace pdm {

/// The exponentially graded mass/potential pair m(x) = m0 e^{cx},
/// V(x) = V0 e^{cx}, with exact closed-form derivatives (never finite
/// differences), so downstream formulas carry no differentiation error.
class ExponentialProfile {
public:
  explicit ExponentialProfile(const SystemConfig& sys);

  double mass(double x) const;
  double mass_d1(double x) const;
  double mass_d2(double x) const;
  double potential(double x) const;

  const SystemConfig& system() const { return sys_; }

private:
  SystemConfig sys_;
};

double bare_potential(const ExponentialProfile& profile, double x);

}  // namespace pdm
