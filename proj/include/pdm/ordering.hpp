#pragma once

#include <array>
#include <string_view>
#include <vector>

#include "pdm/rational.hpp"

namespace pdm {

/// The four ambiguity parameters (a, alpha, beta, gamma) of the four-term
/// effective-mass kinetic operator, validated at construction:
///   alpha + beta + gamma = -1   and   a != -1.
///
/// When all four values are (or snap exactly to) small-denominator rationals
/// the exact representation is kept alongside the doubles, so downstream
/// classification can decide nu^2 = 0 without rounding.
class OrderingParams {
public:
  double a() const { return a_; }
  double alpha() const { return alpha_; }
  double beta() const { return beta_; }
  double gamma() const { return gamma_; }

  bool exact() const { return exact_; }
  /// Exact values in the order {a, alpha, beta, gamma}. Only valid if exact().
  const std::array<Rational, 4>& rationals() const;

  /// Validating factory for float inputs. Inputs that are exactly
  /// small-denominator rationals keep an exact representation.
  static OrderingParams from_reals(double a, double alpha, double beta, double gamma);
  /// Validating factory for exact inputs (constraint checked exactly).
  static OrderingParams from_rationals(const Rational& a, const Rational& alpha,
                                       const Rational& beta, const Rational& gamma);

private:
  OrderingParams() = default;

  double a_ = 0, alpha_ = 0, beta_ = 0, gamma_ = 0;
  bool exact_ = false;
  std::array<Rational, 4> rat_{};
};

/// Same as OrderingParams::from_reals.
OrderingParams make_ordering(double a, double alpha, double beta, double gamma);

struct OrderingPreset {
  std::string_view name;
  OrderingParams params;
};

/// The named orderings from the effective-mass literature, as exact rationals:
///   bendaniel-duke (0, 0, -1, 0)      p(1/m)p
///   gora-williams  (0, -1, 0, 0)      (1/m)p^2 + h.c.
///   zhu-kroemer    (0, -1/2, 0, -1/2) m^{-1/2} p^2 m^{-1/2} symmetrized
///   li-kuhn        (0, 0, -1/2, -1/2)
///   weyl           (1, 0, -1, 0)      equal-weight a-term + p(1/m)p
const std::vector<OrderingPreset>& ordering_presets();

/// Look up a preset by its CLI-facing kebab-case name. Throws UnknownPreset.
const OrderingPreset& preset(std::string_view name);

}  // namespace pdm
