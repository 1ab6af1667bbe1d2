#include "pdm/system.hpp"

#include <cmath>

#include "pdm/errors.hpp"

namespace pdm {

void SystemConfig::validate() const {
  if (!std::isfinite(hbar) || !std::isfinite(m0) || !std::isfinite(c) || !std::isfinite(V0)) {
    throw InvalidConfig("system parameters must be finite");
  }
  if (hbar <= 0) throw InvalidConfig("hbar must be positive");
  if (m0 <= 0) throw InvalidConfig("m0 must be positive");
  if (c == 0) throw InvalidConfig("grading rate c must be nonzero");
}

double SystemConfig::kappa() const {
  validate();
  if (V0 <= 0) throw NoBoundStates("kappa undefined for V0 <= 0");
  return hbar * std::abs(c) * std::sqrt(V0 / (2.0 * m0));
}

}  // namespace pdm
