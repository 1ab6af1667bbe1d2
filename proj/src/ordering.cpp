#include "pdm/ordering.hpp"

#include <cmath>
#include <sstream>

#include "pdm/errors.hpp"

namespace pdm {

namespace {

constexpr double kConstraintTol = 1e-12;

void check_finite(double v, const char* name) {
  if (!std::isfinite(v)) {
    throw InvalidConfig(std::string("ordering parameter ") + name + " is not finite");
  }
}

}  // namespace

const std::array<Rational, 4>& OrderingParams::rationals() const {
  if (!exact_) throw InvalidConfig("ordering has no exact rational representation");
  return rat_;
}

OrderingParams OrderingParams::from_reals(double a, double alpha, double beta, double gamma) {
  check_finite(a, "a");
  check_finite(alpha, "alpha");
  check_finite(beta, "beta");
  check_finite(gamma, "gamma");

  const auto ra = rational_from_double(a);
  const auto ralpha = rational_from_double(alpha);
  const auto rbeta = rational_from_double(beta);
  const auto rgamma = rational_from_double(gamma);
  if (ra && ralpha && rbeta && rgamma) {
    return from_rationals(*ra, *ralpha, *rbeta, *rgamma);
  }

  if (std::abs(alpha + beta + gamma + 1.0) > kConstraintTol) {
    std::ostringstream msg;
    msg << "alpha + beta + gamma must equal -1, got " << alpha + beta + gamma;
    throw ConstraintViolation(msg.str());
  }
  if (a == -1.0) {
    throw DegenerateOrdering("a = -1 makes the 1/(4(a+1)) prefactor diverge");
  }

  OrderingParams p;
  p.a_ = a;
  p.alpha_ = alpha;
  p.beta_ = beta;
  p.gamma_ = gamma;
  return p;
}

OrderingParams OrderingParams::from_rationals(const Rational& a, const Rational& alpha,
                                              const Rational& beta, const Rational& gamma) {
  if (alpha + beta + gamma != Rational(-1)) {
    throw ConstraintViolation("alpha + beta + gamma must equal -1, got " +
                              (alpha + beta + gamma).str());
  }
  if (a == Rational(-1)) {
    throw DegenerateOrdering("a = -1 makes the 1/(4(a+1)) prefactor diverge");
  }

  OrderingParams p;
  p.a_ = a.value();
  p.alpha_ = alpha.value();
  p.beta_ = beta.value();
  p.gamma_ = gamma.value();
  p.exact_ = true;
  p.rat_ = {a, alpha, beta, gamma};
  return p;
}

OrderingParams make_ordering(double a, double alpha, double beta, double gamma) {
  return OrderingParams::from_reals(a, alpha, beta, gamma);
}

const std::vector<OrderingPreset>& ordering_presets() {
  static const std::vector<OrderingPreset> table = [] {
    const Rational h(-1, 2);
    std::vector<OrderingPreset> t;
    t.push_back({"bendaniel-duke", OrderingParams::from_rationals(0, 0, -1, 0)});
    t.push_back({"gora-williams", OrderingParams::from_rationals(0, -1, 0, 0)});
    t.push_back({"zhu-kroemer", OrderingParams::from_rationals(0, h, 0, h)});
    t.push_back({"li-kuhn", OrderingParams::from_rationals(0, 0, h, h)});
    t.push_back({"weyl", OrderingParams::from_rationals(1, 0, -1, 0)});
    return t;
  }();
  return table;
}

const OrderingPreset& preset(std::string_view name) {
  for (const auto& p : ordering_presets()) {
    if (p.name == name) return p;
  }
  throw UnknownPreset("unknown ordering preset: " + std::string(name));
}

}  // namespace pdm
