#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "pdm/grid.hpp"
#include "pdm/spectrum_solver.hpp"

namespace pdmspec {

struct CheckResult {
  std::string name;
  bool pass = false;
  double metric = 0;     // worst observed value
  double threshold = 0;  // what it had to stay under (or inside)
  std::string diagnostic;
};

struct VerifyOptions {
  pdm::Grid grid{-40, 8, 8192};
  int levels = 4;
  std::uint64_t seed = pdm::kDefaultSeed;
  std::string inject_fault;  // negative-control hook, e.g. "preset-nu"
};

/// Runs every library invariant on the reference configuration
/// (hbar = m0 = c = 1, V0 = 2): classification, dual-route agreement, SUSY
/// identities, solver self-tests, and the numeric-vs-analytic comparisons on
/// the configured grid.
std::vector<CheckResult> run_verification(const VerifyOptions& opts);

}  // namespace pdmspec
