#include "pdm/ambiguity.hpp"

#include <cmath>

namespace pdm {

AmbiguityReport nu_value(const OrderingParams& ordering) {
  AmbiguityReport report;
  if (ordering.exact()) {
    const auto& [a, alpha, beta, gamma] = ordering.rationals();
    (void)beta;  // enters only through the construction constraint
    const Rational s = a - Rational(2) * alpha * gamma - alpha - gamma;
    const Rational q_over_c2 = s / (Rational(4) * (a + Rational(1)));
    const Rational nu2 = Rational(1) - Rational(2) * s / (a + Rational(1));
    report.q_over_c2 = q_over_c2.value();
    report.nu_squared = nu2.value();
    report.q_over_c2_exact = q_over_c2;
    report.nu_squared_exact = nu2;
    report.classification = nu2.sign() < 0 ? Classification::Complex : Classification::Real;
  } else {
    const double a = ordering.a();
    const double s = a - 2.0 * ordering.alpha() * ordering.gamma() - ordering.alpha() -
                     ordering.gamma();
    report.q_over_c2 = s / (4.0 * (a + 1.0));
    report.nu_squared = 1.0 - 2.0 * s / (a + 1.0);
    report.classification =
        report.nu_squared < 0 ? Classification::Complex : Classification::Real;
  }
  if (report.classification == Classification::Real) {
    report.nu = std::sqrt(report.nu_squared);
  }
  return report;
}

double q_value(const OrderingParams& ordering, const SystemConfig& sys) {
  sys.validate();
  return nu_value(ordering).q_over_c2 * sys.c * sys.c;
}

AmbiguityReport ambiguity_report(const OrderingParams& ordering, const SystemConfig& sys) {
  sys.validate();
  return nu_value(ordering);
}

double ambiguity_potential(const OrderingParams& ordering, double hbar, double m, double m_d1,
                           double m_d2) {
  const double a = ordering.a();
  const double alpha = ordering.alpha();
  const double gamma = ordering.gamma();
  const double c1 = alpha + gamma - a;
  const double c2 = a - alpha * gamma - alpha - gamma;
  return -hbar * hbar / (4.0 * m * m * m * (a + 1.0)) * (c1 * m * m_d2 + 2.0 * c2 * m_d1 * m_d1);
}

double ambiguity_potential(const OrderingParams& ordering, const ExponentialProfile& profile,
                           double x) {
  return ambiguity_potential(ordering, profile.system().hbar, profile.mass(x),
                             profile.mass_d1(x), profile.mass_d2(x));
}

double effective_potential(const OrderingParams& ordering, const ExponentialProfile& profile,
                           double x) {
  const double hbar = profile.system().hbar;
  const double m = profile.mass(x);
  const double r1 = profile.mass_d1(x) / m;
  const double r2 = profile.mass_d2(x) / m;
  const double correction = hbar * hbar / (4.0 * m) * (1.5 * r1 * r1 - r2);
  return profile.potential(x) + ambiguity_potential(ordering, profile, x) + correction;
}

}  // namespace pdm
