#pragma once

#include <optional>

#include "pdm/ordering.hpp"
#include "pdm/profile.hpp"
#include "pdm/rational.hpp"
#include "pdm/system.hpp"

namespace pdm {

enum class Classification { Real, Complex };

/// Classification of an ordering: the dimensionless combinations governing
/// its spectrum. q scales as q = q_over_c2 * c^2; nu^2 = 1 - 8 q / c^2 is
/// c-independent. For exact orderings the rational fields are engaged and the
/// Real/Complex decision is made without rounding. Complex orderings are a
/// classification, never an error here, and never a NaN: nu is simply absent.
struct AmbiguityReport {
  Classification classification = Classification::Real;
  double nu_squared = 0;
  std::optional<double> nu;  // +sqrt(nu_squared), engaged iff Real
  double q_over_c2 = 0;      // (a - 2 alpha gamma - alpha - gamma) / (4(a+1))
  std::optional<Rational> nu_squared_exact;
  std::optional<Rational> q_over_c2_exact;

  bool real() const { return classification == Classification::Real; }
};

/// Classify an ordering; nu^2 = 1 - 8 q / c^2 holds for every c != 0.
AmbiguityReport nu_value(const OrderingParams& ordering);

/// q = c^2 (a - 2 alpha gamma - alpha - gamma) / (4(a+1)).
double q_value(const OrderingParams& ordering, const SystemConfig& sys);

/// Classification with the c-scaled q attached.
AmbiguityReport ambiguity_report(const OrderingParams& ordering, const SystemConfig& sys);

/// The ordering-dependent potential produced by the noncommutativity of
/// momentum and mass, from the (m, m', m'') triple:
///   U = -hbar^2 / (4 m^3 (a+1)) [ (alpha+gamma-a) m m''
///                                + 2 (a - alpha gamma - alpha - gamma) m'^2 ].
double ambiguity_potential(const OrderingParams& ordering, double hbar, double m, double m_d1,
                           double m_d2);
double ambiguity_potential(const OrderingParams& ordering, const ExponentialProfile& profile,
                           double x);

/// Effective potential of the symmetrized (first-derivative-free) equation:
///   U_eff = V + U + hbar^2/(4m) [ 3/2 (m'/m)^2 - m''/m ].
double effective_potential(const OrderingParams& ordering, const ExponentialProfile& profile,
                           double x);

}  // namespace pdm
