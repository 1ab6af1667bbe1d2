#include "pdm/rational.hpp"

#include <cmath>
#include <cstdlib>
#include <limits>
#include <numeric>

#include "pdm/errors.hpp"

namespace pdm {

namespace {

long long checked(__int128 v) {
  if (v > std::numeric_limits<long long>::max() || v < std::numeric_limits<long long>::min()) {
    throw InvalidConfig("rational overflow");
  }
  return static_cast<long long>(v);
}

Rational make(__int128 num, __int128 den) {
  if (den == 0) throw InvalidConfig("rational with zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  __int128 a = num < 0 ? -num : num;
  __int128 g = den;
  while (a != 0) {
    __int128 t = g % a;
    g = a;
    a = t;
  }
  if (g > 1) {
    num /= g;
    den /= g;
  }
  return {checked(num), checked(den)};
}

}  // namespace

Rational::Rational(long long n, long long d) {
  if (d == 0) throw InvalidConfig("rational with zero denominator");
  if (d < 0) {
    n = -n;
    d = -d;
  }
  const long long g = std::gcd(n, d);
  num_ = g > 1 ? n / g : n;
  den_ = g > 1 ? d / g : d;
}

std::string Rational::str() const {
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

Rational operator-(const Rational& r) { return make(-static_cast<__int128>(r.num()), r.den()); }

Rational operator+(const Rational& a, const Rational& b) {
  return make(static_cast<__int128>(a.num()) * b.den() + static_cast<__int128>(b.num()) * a.den(),
              static_cast<__int128>(a.den()) * b.den());
}

Rational operator-(const Rational& a, const Rational& b) { return a + (-b); }

Rational operator*(const Rational& a, const Rational& b) {
  return make(static_cast<__int128>(a.num()) * b.num(), static_cast<__int128>(a.den()) * b.den());
}

Rational operator/(const Rational& a, const Rational& b) {
  if (b.is_zero()) throw InvalidConfig("rational division by zero");
  return make(static_cast<__int128>(a.num()) * b.den(), static_cast<__int128>(a.den()) * b.num());
}

bool operator==(const Rational& a, const Rational& b) {
  return a.num() == b.num() && a.den() == b.den();
}
bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
bool operator<(const Rational& a, const Rational& b) {
  return static_cast<__int128>(a.num()) * b.den() < static_cast<__int128>(b.num()) * a.den();
}
bool operator<=(const Rational& a, const Rational& b) { return a < b || a == b; }
bool operator>(const Rational& a, const Rational& b) { return b < a; }
bool operator>=(const Rational& a, const Rational& b) { return b <= a; }

std::optional<Rational> rational_from_double(double v, long long max_den) {
  if (!std::isfinite(v)) return std::nullopt;
  if (std::abs(v) > 1e12) return std::nullopt;
  for (long long d = 1; d <= max_den; ++d) {
    const double scaled = v * static_cast<double>(d);
    const double n = std::nearbyint(scaled);
    if (std::abs(n) > 9.0e15) return std::nullopt;
    const auto num = static_cast<long long>(n);
    if (static_cast<double>(num) / static_cast<double>(d) == v) {
      return Rational(num, d);
    }
  }
  return std::nullopt;
}

}  // namespace pdm
