#include <stdexcept>
#include <utility>

#include "echspec/spectrum.hpp"

namespace echspec {
namespace detail {

u128 floor_sum_u128(u128 n, u128 m, u128 a, u128 b) {
  u128 ans = 0;
  while (true) {
    if (a >= m) {
      ans += n * (n - 1) / 2 * (a / m);
      a %= m;
    }
    if (b >= m) {
      ans += n * (b / m);
      b %= m;
    }
    const u128 y_max = a * n + b;
    if (y_max < m) break;
    n = y_max / m;
    b = y_max % m;
    std::swap(m, a);
  }
  return ans;
}

}  // namespace detail

namespace {

constexpr unsigned kNativeBits = 40;

bool below_native_limit(const BigInt& v) { return mpz_sizeinbase(v.get_mpz_t(), 2) <= kNativeBits; }

detail::u128 to_u128(const BigInt& v) {
  // Only called for values below 2^40.
  return static_cast<detail::u128>(mpz_get_ui(v.get_mpz_t()));
}

BigInt from_u128(detail::u128 v) {
  const auto hi = static_cast<unsigned long>(v >> 64);
  const auto lo = static_cast<unsigned long>(v);
  BigInt r = hi;
  r <<= 64;
  r += lo;
  return r;
}

BigInt floor_sum_big(BigInt n, BigInt m, BigInt a, BigInt b) {
  BigInt ans = 0;
  BigInt t;
  while (true) {
    if (a >= m) {
      t = n * (n - 1) / 2;
      ans += t * (a / m);
      a %= m;
    }
    if (b >= m) {
      ans += n * (b / m);
      b %= m;
    }
    BigInt y_max = a * n + b;
    if (y_max < m) break;
    n = y_max / m;
    b = y_max % m;
    m.swap(a);
  }
  return ans;
}

}  // namespace

BigInt floor_sum(const BigInt& n, const BigInt& p, const BigInt& q, const BigInt& m) {
  if (sgn(n) < 0 || sgn(p) < 0 || sgn(q) < 0) {
    throw std::invalid_argument("floor_sum: n, p, q must be nonnegative");
  }
  if (sgn(m) <= 0) throw std::invalid_argument("floor_sum: m must be positive");
  if (sgn(n) == 0) return 0;
  if (below_native_limit(n) && below_native_limit(p) && below_native_limit(q) &&
      below_native_limit(m)) {
    return from_u128(detail::floor_sum_u128(to_u128(n), to_u128(m), to_u128(p), to_u128(q)));
  }
  return floor_sum_big(n, m, p, q);
}

}  // namespace echspec
