#pragma once

/**
 * @file rational.hpp
 * @brief Exact arbitrary-precision integers and fractions.
 *
 * BigInt is GMP's mpz_class. Rational wraps mpq_class and keeps the usual
 * canonical form: denominator > 0, gcd(|num|, den) = 1, zero stored as 0/1.
 * There is no implicit conversion to or from floating point.
 */

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace echspec {

using BigInt = mpz_class;

// Parses an optionally signed decimal integer. Throws std::invalid_argument.
BigInt parse_bigint(std::string_view text);

// floor(sqrt(v)) for v >= 0.
BigInt isqrt(const BigInt& v);

class Rational {
 public:
  Rational() = default;
  Rational(long value) : v_(value) {}  // NOLINT(google-explicit-constructor)
  Rational(const BigInt& value) : v_(value) {}  // NOLINT(google-explicit-constructor)
  Rational(const BigInt& num, const BigInt& den);

  // Accepts "p", "-p", "+p" or "p/q" with decimal integers p, q (q != 0).
  // Decimal fractions such as "0.5" are rejected: every input stays exact.
  static Rational parse(std::string_view text);

  BigInt numerator() const { return v_.get_num(); }
  BigInt denominator() const { return v_.get_den(); }

  int sign() const { return sgn(v_); }
  bool is_zero() const { return sign() == 0; }
  bool is_integer() const { return v_.get_den() == 1; }

  // Nearest double (round-to-nearest on the exact quotient).
  double to_double() const;
  // "p" for integers, "p/q" otherwise.
  std::string to_string() const;
  // Always "p/q", with q = 1 for integers.
  std::string to_fraction_string() const;

  const mpq_class& raw() const { return v_; }

  Rational operator-() const;
  Rational& operator+=(const Rational& o);
  Rational& operator-=(const Rational& o);
  Rational& operator*=(const Rational& o);
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational l, const Rational& r) { return l += r; }
  friend Rational operator-(Rational l, const Rational& r) { return l -= r; }
  friend Rational operator*(Rational l, const Rational& r) { return l *= r; }
  friend Rational operator/(Rational l, const Rational& r) { return l /= r; }

  friend bool operator==(const Rational& l, const Rational& r) { return l.v_ == r.v_; }
  friend std::strong_ordering operator<=>(const Rational& l, const Rational& r) {
    const int c = cmp(l.v_, r.v_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

 private:
  mpq_class v_;
};

BigInt floor(const Rational& x);
BigInt ceil(const Rational& x);

std::ostream& operator<<(std::ostream& os, const Rational& x);

// Exact conversion of a BigInt that fits in int64_t; throws std::overflow_error otherwise.
std::int64_t to_int64(const BigInt& v);
bool fits_int64(const BigInt& v);

}  // namespace echspec
