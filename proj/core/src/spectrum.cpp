#include "echspec/spectrum.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>
#include <utility>

namespace echspec {
namespace {

// Sum over rows n = 0..last of (floor((v - n*row_step)/inner) + 1), where
// last <= v / row_step. Reversing the row index turns it into one floor_sum.
BigInt lattice_rows(const BigInt& inner, const BigInt& row_step, const BigInt& v,
                    const BigInt& last) {
  const BigInt rows = last + 1;
  return floor_sum(rows, row_step, v - last * row_step, inner) + rows;
}

const BigInt& larger(const BigInt& x, const BigInt& y) { return x >= y ? x : y; }
const BigInt& smaller(const BigInt& x, const BigInt& y) { return x >= y ? y : x; }

// Scaled values of all lattice points with lo <= m*inner + n*step <= hi, unsorted.
template <class Int>
void collect_window(const Int& inner, const Int& step, const Int& lo, const Int& hi,
                    std::vector<Int>& out) {
  for (Int n = 0, base = 0; base <= hi; ++n, base += step) {
    Int m_first = 0;
    if (lo > base) m_first = (lo - base + inner - 1) / inner;
    const Int m_last = (hi - base) / inner;
    for (Int m = m_first; m <= m_last; ++m) out.push_back(m * inner + base);
  }
}

}  // namespace

Ellipsoid::Ellipsoid(Rational a, Rational b) : a_(std::move(a)), b_(std::move(b)) {
  if (a_.sign() <= 0 || b_.sign() <= 0) {
    throw std::invalid_argument("ellipsoid parameters must be positive, got a=" +
                                a_.to_string() + " b=" + b_.to_string());
  }
}

ScaledEllipsoid ScaledEllipsoid::of(const Ellipsoid& e) {
  ScaledEllipsoid s;
  const BigInt da = e.a().denominator();
  const BigInt db = e.b().denominator();
  mpz_lcm(s.den.get_mpz_t(), da.get_mpz_t(), db.get_mpz_t());
  s.A = e.a().numerator() * (s.den / da);
  s.B = e.b().numerator() * (s.den / db);
  return s;
}

BigInt count_leq_scaled(const ScaledEllipsoid& s, const BigInt& v) {
  if (sgn(v) < 0) return 0;
  const BigInt& step = larger(s.A, s.B);
  const BigInt& inner = smaller(s.A, s.B);
  return lattice_rows(inner, step, v, v / step);
}

BigInt count_leq(const Ellipsoid& e, const Rational& t) {
  if (t.sign() < 0) return 0;
  const auto s = ScaledEllipsoid::of(e);
  return count_leq_scaled(s, floor(t * Rational(s.den)));
}

BigInt distinct_values_leq(const Ellipsoid& e, const Rational& t) {
  if (t.sign() < 0) return 0;
  const auto s = ScaledEllipsoid::of(e);
  BigInt g;
  mpz_gcd(g.get_mpz_t(), s.A.get_mpz_t(), s.B.get_mpz_t());
  const BigInt a = s.A / g;
  const BigInt b = s.B / g;
  const BigInt v = floor(t * Rational(s.den)) / g;
  // Each representable integer m*a + n*b has exactly one representation with 0 <= n < a.
  BigInt last = v / b;
  if (last > a - 1) last = a - 1;
  return lattice_rows(a, b, v, last);
}

BigInt nth_value_scaled(const ScaledEllipsoid& s, const BigInt& k) {
  if (sgn(k) < 0) throw std::invalid_argument("capacity index must be nonnegative");
  if (sgn(k) == 0) return 0;
  const BigInt target = k + 1;
  // count(v) >= v^2/(2AB) and count(v) <= (v + A + B)^2/(2AB) bracket the answer.
  const BigInt root = isqrt(2 * s.A * s.B * target);
  BigInt hi = root;
  const BigInt axis = k * smaller(s.A, s.B);
  if (axis < hi) hi = axis;
  BigInt lo = root - s.A - s.B;
  if (sgn(lo) < 0) lo = 0;
  while (lo < hi) {
    BigInt mid = (lo + hi) / 2;
    if (count_leq_scaled(s, mid) >= target) {
      hi = std::move(mid);
    } else {
      lo = mid + 1;
    }
  }
  return lo;
}

Rational nth_capacity(const Ellipsoid& e, const BigInt& k) {
  const auto s = ScaledEllipsoid::of(e);
  return s.value(nth_value_scaled(s, k));
}

std::vector<BigInt> spectrum_range_scaled(const ScaledEllipsoid& s, const BigInt& k0,
                                          const BigInt& k1) {
  if (sgn(k0) < 0) throw std::invalid_argument("spectrum_range: k0 must be nonnegative");
  if (k0 > k1) throw std::invalid_argument("spectrum_range: k0 > k1");

  const BigInt v_first = nth_value_scaled(s, k0);
  const BigInt v_last = nth_value_scaled(s, k1);
  const BigInt before = count_leq_scaled(s, v_first - 1);
  const std::size_t skip = mpz_get_ui(BigInt(k0 - before).get_mpz_t());
  const std::size_t want = mpz_get_ui(BigInt(k1 - k0 + 1).get_mpz_t());

  const BigInt& step = larger(s.A, s.B);
  const BigInt& inner = smaller(s.A, s.B);

  std::vector<BigInt> out;
  out.reserve(want);
  constexpr std::int64_t kLimit = std::numeric_limits<std::int64_t>::max() / 4;
  if (fits_int64(v_last) && to_int64(v_last) < kLimit && to_int64(step) < kLimit) {
    std::vector<std::int64_t> window;
    collect_window<std::int64_t>(to_int64(inner), to_int64(step), to_int64(v_first),
                                 to_int64(v_last), window);
    std::sort(window.begin(), window.end());
    for (std::size_t i = 0; i < want; ++i) out.emplace_back(static_cast<long>(window[skip + i]));
  } else {
    std::vector<BigInt> window;
    collect_window<BigInt>(inner, step, v_first, v_last, window);
    std::sort(window.begin(), window.end());
    for (std::size_t i = 0; i < want; ++i) out.push_back(window[skip + i]);
  }
  return out;
}

std::vector<SpectrumEntry> spectrum_range(const Ellipsoid& e, const BigInt& k0, const BigInt& k1) {
  const auto s = ScaledEllipsoid::of(e);
  const auto scaled = spectrum_range_scaled(s, k0, k1);
  std::vector<SpectrumEntry> out;
  out.reserve(scaled.size());
  BigInt k = k0;
  for (const auto& v : scaled) {
    out.push_back({k, s.value(v)});
    ++k;
  }
  return out;
}

Rational first_coincidence(const Ellipsoid& e) {
  const auto s = ScaledEllipsoid::of(e);
  BigInt l;
  mpz_lcm(l.get_mpz_t(), s.A.get_mpz_t(), s.B.get_mpz_t());
  return s.value(l);
}

}  // namespace echspec
