#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>

namespace zeroseq {

// Exact rational with int64 parts. Denominator is kept positive and the
// fraction reduced, so equality is structural. All threshold and band
// arithmetic must stay exact; never round through floating point.
struct Rational {
  long long num = 0;
  long long den = 1;

  Rational() = default;
  Rational(long long n) : num(n), den(1) {}
  Rational(long long n, long long d) : num(n), den(d) { normalize(); }

  void normalize() {
    if (den == 0) throw std::invalid_argument("Rational: zero denominator");
    if (den < 0) {
      num = -num;
      den = -den;
    }
    long long g = std::gcd(num < 0 ? -num : num, den);
    if (g > 1) {
      num /= g;
      den /= g;
    }
  }

  bool is_integer() const { return den == 1; }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num == b.num && a.den == b.den;
  }
  friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
  friend bool operator<(const Rational& a, const Rational& b) {
    return static_cast<__int128>(a.num) * b.den < static_cast<__int128>(b.num) * a.den;
  }
  friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
  friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
  friend bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }
};

// Floor division for possibly negative numerators.
inline long long floor_div(long long a, long long b) {
  if (b < 0) {
    a = -a;
    b = -b;
  }
  long long q = a / b;
  if (a % b != 0 && a < 0) --q;
  return q;
}

inline long long ceil_div(long long a, long long b) {
  if (b < 0) {
    a = -a;
    b = -b;
  }
  long long q = a / b;
  if (a % b != 0 && a > 0) ++q;
  return q;
}

inline long long rational_floor(const Rational& q) { return floor_div(q.num, q.den); }
inline long long rational_ceil(const Rational& q) { return ceil_div(q.num, q.den); }

}  // namespace zeroseq
