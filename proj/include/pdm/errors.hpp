#pragma once

#include <stdexcept>
#include <string>

namespace pdm {

/// Base class for every error thrown by this library.
class Error : public std::runtime_error {
public:
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Ordering parameters violate alpha + beta + gamma = -1.
class ConstraintViolation : public Error {
public:
  using Error::Error;
};

/// a = -1: the 1/(4(a+1)) prefactor of the four-term Hamiltonian diverges.
class DegenerateOrdering : public Error {
public:
  using Error::Error;
};

class UnknownPreset : public Error {
public:
  using Error::Error;
};

/// Physical constants or grid bounds out of range.
class InvalidConfig : public Error {
public:
  using Error::Error;
};

/// nu^2 < 0: the ordering would produce complex energies and is rejected
/// for spectral computations (classification itself never throws).
class ComplexOrdering : public Error {
public:
  using Error::Error;
};

/// V0 <= 0: the well is not confining, no discrete spectrum exists.
class NoBoundStates : public Error {
public:
  using Error::Error;
};

/// The sampled ground state is visibly truncated at a grid boundary.
class DomainTooSmall : public Error {
public:
  using Error::Error;
};

/// Fewer than 3 interior points: stencils are undefined.
class GridTooCoarse : public Error {
public:
  using Error::Error;
};

/// Bisection hit its iteration cap before the requested width.
class ToleranceNotReached : public Error {
public:
  using Error::Error;
};

/// Inverse iteration failed to converge after the re-shift retries.
class SingularShift : public Error {
public:
  using Error::Error;
};

}  // namespace pdm
