#pragma once

#include <cmath>
#include <cstdint>
#include <span>
#include <vector>

#include "pdm/system.hpp"

namespace pdm::testing {

inline double rel_diff(double got, double want) {
  return std::abs(got - want) / std::max(1.0, std::abs(want));
}

/// Deterministic generator independent of <random> distribution internals.
class Rng {
public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    state_ += 0x9e3779b97f4a7c15ULL;
    std::uint64_t z = state_;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }  // [0,1)
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
  double log_uniform(double lo, double hi) {
    return std::exp(uniform(std::log(lo), std::log(hi)));
  }
  long long integer(long long lo, long long hi) {  // inclusive
    return lo + static_cast<long long>(next() % static_cast<std::uint64_t>(hi - lo + 1));
  }

private:
  std::uint64_t state_;
};

inline pdm::SystemConfig reference_system() { return {1.0, 1.0, 1.0, 2.0}; }  // kappa = 1

/// Characteristic-polynomial sign-change count: the independent oracle for
/// Sturm counts. p_0 = 1, p_i = (d_i - sigma) p_{i-1} - e_{i-1}^2 p_{i-2};
/// eigenvalues below sigma = sign changes along the sequence.
inline int charpoly_count_below(std::span<const double> diag, std::span<const double> off,
                                double sigma) {
  double pprev = 1.0;
  double p = diag[0] - sigma;
  int changes = p < 0 ? 1 : 0;
  double last_sign = p < 0 ? -1.0 : 1.0;
  if (p == 0.0) {
    changes = 1;
    last_sign = -1.0;
  }
  for (std::size_t i = 1; i < diag.size(); ++i) {
    double pnext = (diag[i] - sigma) * p - off[i - 1] * off[i - 1] * pprev;
    pprev = p;
    p = pnext;
    const double mag = std::max(std::abs(p), std::abs(pprev));
    if (mag > 1e200 || (mag > 0 && mag < 1e-200)) {
      p /= mag;
      pprev /= mag;
    }
    double sign = p > 0 ? 1.0 : (p < 0 ? -1.0 : -last_sign);
    if (sign != last_sign) {
      ++changes;
      last_sign = sign;
    }
  }
  return changes;
}

}  // namespace pdm::testing
