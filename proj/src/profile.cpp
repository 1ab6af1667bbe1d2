#include "pdm/profile.hpp"

#include <cmath>

namespace pdm {

ExponentialProfile::ExponentialProfile(const SystemConfig& sys) : sys_(sys) { sys_.validate(); }

double ExponentialProfile::mass(double x) const { return sys_.m0 * std::exp(sys_.c * x); }

double ExponentialProfile::mass_d1(double x) const { return sys_.c * mass(x); }

double ExponentialProfile::mass_d2(double x) const { return sys_.c * sys_.c * mass(x); }

double ExponentialProfile::potential(double x) const { return sys_.V0 * std::exp(sys_.c * x); }

double bare_potential(const ExponentialProfile& profile, double x) {
  return profile.potential(x);
}

}  // namespace pdm
