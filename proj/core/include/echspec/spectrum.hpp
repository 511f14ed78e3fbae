#pragma once

// Exact ECH spectrum of the ellipsoid E(a, b).
//
// N(a,b) is the multiset {m*a + n*b : m, n >= 0}, sorted, one entry per
// lattice point (m, n). Its k-th entry (0-indexed) is the capacity of the
// generator in grading 2k. Everything here is exact; lattice counts under the
// line m*a + n*b <= t take O(log) integer steps via floor_sum.

#include <cstdint>
#include <vector>

#include "echspec/rational.hpp"

namespace echspec {

class Ellipsoid {
 public:
  // Throws std::invalid_argument unless a > 0 and b > 0.
  Ellipsoid(Rational a, Rational b);

  const Rational& a() const { return a_; }
  const Rational& b() const { return b_; }
  Ellipsoid swapped() const { return Ellipsoid(b_, a_); }

  friend bool operator==(const Ellipsoid&, const Ellipsoid&) = default;

 private:
  Rational a_;
  Rational b_;
};

// Integer form of an ellipsoid: a = A/den, b = B/den with den = lcm of the
// denominators, so m*a + n*b = (m*A + n*B)/den exactly.
struct ScaledEllipsoid {
  BigInt A;
  BigInt B;
  BigInt den;

  static ScaledEllipsoid of(const Ellipsoid& e);
  Rational value(const BigInt& scaled) const { return Rational(scaled, den); }
};

// Sum_{i=0}^{n-1} floor((p*i + q) / m) for n, p, q >= 0 and m >= 1, by the
// Euclidean swap/modulo reduction. Throws std::invalid_argument on bad signs.
BigInt floor_sum(const BigInt& n, const BigInt& p, const BigInt& q, const BigInt& m);

namespace detail {
__extension__ typedef unsigned __int128 u128;

// Same reduction on native 128-bit words. Callers guarantee all inputs < 2^40,
// which keeps every intermediate below 2^121.
u128 floor_sum_u128(u128 n, u128 m, u128 a, u128 b);
}  // namespace detail

// #{(m, n) >= 0 : m*A + n*B <= v}; 0 for v < 0.
BigInt count_leq_scaled(const ScaledEllipsoid& s, const BigInt& v);

// #{(m, n) >= 0 : m*a + n*b <= t}; 0 for t < 0.
BigInt count_leq(const Ellipsoid& e, const Rational& t);

// Number of distinct values m*a + n*b lying in [0, t].
BigInt distinct_values_leq(const Ellipsoid& e, const Rational& t);

// k-th element (0-indexed, with multiplicity) of N(a,b), as the scaled integer
// m*A + n*B. Throws std::invalid_argument for k < 0.
BigInt nth_value_scaled(const ScaledEllipsoid& s, const BigInt& k);

// k-th element (0-indexed, with multiplicity) of N(a,b).
Rational nth_capacity(const Ellipsoid& e, const BigInt& k);

struct SpectrumEntry {
  BigInt k;
  Rational value;

  friend bool operator==(const SpectrumEntry&, const SpectrumEntry&) = default;
};

// Scaled values N(a,b)_k * den for k in [k0, k1], in index order. One binary
// search locates the block start; the window is then enumerated directly.
std::vector<BigInt> spectrum_range_scaled(const ScaledEllipsoid& s, const BigInt& k0,
                                          const BigInt& k1);

// N(a,b)_k for k in [k0, k1]. Throws std::invalid_argument if k0 > k1 or k0 < 0.
std::vector<SpectrumEntry> spectrum_range(const Ellipsoid& e, const BigInt& k0, const BigInt& k1);

// Smallest value attained by two distinct lattice points, lcm(A, B)/den.
// Below it every value of N(a,b) has multiplicity one; this is the tie-free
// range in which a rational approximant of an irrational ratio is faithful.
Rational first_coincidence(const Ellipsoid& e);

}  // namespace echspec
