#pragma once

#include <cstdint>
#include <numeric>
#include <string>

#include "fflab/errors.hpp"

namespace fflab {

// Exact rational on 64-bit integers.  Used for value-group exponents (which
// live in (1/l)Z for small l) and for report arithmetic; magnitudes stay tiny,
// but products are routed through __int128 so overflow cannot occur silently.
struct Rat {
  long long n = 0;  // numerator
  long long d = 1;  // denominator, always > 0, gcd(|n|, d) == 1

  Rat() = default;
  Rat(long long v) : n(v), d(1) {}  // NOLINT: implicit by design
  Rat(long long num, long long den) : n(num), d(den) { normalize(); }

  void normalize() {
    if (d == 0) throw DivisionByZero("rational with zero denominator");
    if (d < 0) { n = -n; d = -d; }
    long long g = std::gcd(n < 0 ? -n : n, d);
    if (g > 1) { n /= g; d /= g; }
    if (n == 0) d = 1;
  }

  bool is_integer() const { return d == 1; }

  // floor(n/d) as an integer
  long long floor() const {
    long long q = n / d, r = n % d;
    return (r != 0 && n < 0) ? q - 1 : q;
  }
  long long ceil() const {
    long long q = n / d, r = n % d;
    return (r != 0 && n > 0) ? q + 1 : q;
  }

  friend Rat operator+(const Rat& a, const Rat& b) {
    __int128 num = (__int128)a.n * b.d + (__int128)b.n * a.d;
    __int128 den = (__int128)a.d * b.d;
    return from128(num, den);
  }
  friend Rat operator-(const Rat& a, const Rat& b) {
    __int128 num = (__int128)a.n * b.d - (__int128)b.n * a.d;
    __int128 den = (__int128)a.d * b.d;
    return from128(num, den);
  }
  friend Rat operator*(const Rat& a, const Rat& b) {
    return from128((__int128)a.n * b.n, (__int128)a.d * b.d);
  }
  friend Rat operator/(const Rat& a, const Rat& b) {
    if (b.n == 0) throw DivisionByZero("rational division by zero");
    return from128((__int128)a.n * b.d, (__int128)a.d * b.n);
  }
  Rat operator-() const { Rat r; r.n = -n; r.d = d; return r; }

  friend bool operator==(const Rat& a, const Rat& b) { return a.n == b.n && a.d == b.d; }
  friend bool operator!=(const Rat& a, const Rat& b) { return !(a == b); }
  friend bool operator<(const Rat& a, const Rat& b) {
    return (__int128)a.n * b.d < (__int128)b.n * a.d;
  }
  friend bool operator>(const Rat& a, const Rat& b) { return b < a; }
  friend bool operator<=(const Rat& a, const Rat& b) { return !(b < a); }
  friend bool operator>=(const Rat& a, const Rat& b) { return !(a < b); }

  std::string str() const {
    if (d == 1) return std::to_string(n);
    return std::to_string(n) + "/" + std::to_string(d);
  }

  double to_double() const { return static_cast<double>(n) / static_cast<double>(d); }

 private:
  static Rat from128(__int128 num, __int128 den) {
    if (den < 0) { num = -num; den = -den; }
    __int128 a = num < 0 ? -num : num, b = den;
    while (b) { __int128 t = a % b; a = b; b = t; }
    if (a > 1) { num /= a; den /= a; }
    if (num == 0) den = 1;
    constexpr __int128 lim = (__int128)INT64_MAX;
    if (num > lim || num < -lim || den > lim)
      throw ParamError("rational overflow");
    Rat r;
    r.n = (long long)num;
    r.d = (long long)den;
    return r;
  }
};

}  // namespace fflab
