#pragma once

#include <optional>
#include <string>

namespace pdm {

/// Exact rational arithmetic on 64-bit numerator/denominator, used for the
/// ordering-parameter algebra where the sign of nu^2 must not depend on
/// floating-point rounding. Values stay tiny (Table-style fractions), so no
/// arbitrary-precision backend is needed; intermediate products are checked
/// in 128-bit.
class Rational {
public:
  constexpr Rational() = default;
  constexpr Rational(long long n) : num_(n) {}  // NOLINT: implicit by design
  Rational(long long n, long long d);

  long long num() const { return num_; }
  long long den() const { return den_; }

  double value() const { return static_cast<double>(num_) / static_cast<double>(den_); }
  int sign() const { return (num_ > 0) - (num_ < 0); }
  bool is_zero() const { return num_ == 0; }
  bool is_integer() const { return den_ == 1; }

  /// "0", "-1", "3/4", ...
  std::string str() const;

private:
  long long num_ = 0;
  long long den_ = 1;
};

Rational operator-(const Rational& r);
Rational operator+(const Rational& a, const Rational& b);
Rational operator-(const Rational& a, const Rational& b);
Rational operator*(const Rational& a, const Rational& b);
Rational operator/(const Rational& a, const Rational& b);  // throws InvalidConfig on /0

bool operator==(const Rational& a, const Rational& b);
bool operator!=(const Rational& a, const Rational& b);
bool operator<(const Rational& a, const Rational& b);
bool operator<=(const Rational& a, const Rational& b);
bool operator>(const Rational& a, const Rational& b);
bool operator>=(const Rational& a, const Rational& b);

/// Recover an exact small-denominator rational from a double, if the double
/// *is* one (n/d with d <= max_den reproducing the bit pattern exactly).
/// Returns nullopt otherwise.
std::optional<Rational> rational_from_double(double v, long long max_den = 128);

}  // namespace pdm
