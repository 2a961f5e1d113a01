#pragma once

#include <cstdint>
#include <numeric>

#include "core/errors.hpp"

namespace hyptv {

// Checked int64 arithmetic: overflow is a hard error, never wraparound.
inline std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw Error(Errc::overflow, "integer overflow in addition");
  return r;
}

inline std::int64_t checked_sub(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_sub_overflow(a, b, &r)) throw Error(Errc::overflow, "integer overflow in subtraction");
  return r;
}

inline std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw Error(Errc::overflow, "integer overflow in multiplication");
  return r;
}

// Minimal exact rational, normalized with positive denominator.
struct Rational {
  std::int64_t num{0};
  std::int64_t den{1};

  Rational() = default;
  Rational(std::int64_t n) : num(n) {}  // NOLINT(google-explicit-constructor)
  Rational(std::int64_t n, std::int64_t d) {
    if (d == 0) throw Error(Errc::invalid_argument, "rational with zero denominator");
    if (d < 0) {
      n = checked_sub(0, n);
      d = checked_sub(0, d);
    }
    const std::int64_t g = std::gcd(n, d);
    num = n / (g == 0 ? 1 : g);
    den = d / (g == 0 ? 1 : g);
  }

  Rational operator+(const Rational& o) const {
    return Rational(checked_add(checked_mul(num, o.den), checked_mul(o.num, den)),
                    checked_mul(den, o.den));
  }

  bool operator==(const Rational& o) const { return num == o.num && den == o.den; }

  bool is_integer() const { return den == 1; }
};

}  // namespace hyptv
