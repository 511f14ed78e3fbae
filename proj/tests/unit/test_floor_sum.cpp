#include <random>
#include <sstream>
#include <stdexcept>
#include <vector>

#include <gtest/gtest.h>

#include "echspec/spectrum.hpp"
#include "oracles.hpp"

using echspec::BigInt;
using echspec::floor_sum;

namespace {

BigInt to_big(const oracle::Int& v) {
  std::ostringstream os;
  os << v;
  return BigInt(os.str());
}

}  // namespace

TEST(FloorSum, DocumentedExamples) {
  EXPECT_EQ(floor_sum(0, 7, 3, 5), 0);
  EXPECT_EQ(floor_sum(4, 1, 0, 2), 2);
}

TEST(FloorSum, MatchesNaiveLoopOnSmallRandomInstances) {
  std::mt19937_64 rng(2024);
  std::uniform_int_distribution<std::int64_t> dist(0, 1000);
  std::uniform_int_distribution<std::int64_t> mod(1, 1000);
  for (int i = 0; i < 20000; ++i) {
    const auto n = dist(rng), p = dist(rng), q = dist(rng), m = mod(rng);
    ASSERT_EQ(floor_sum(n, p, q, m), to_big(oracle::floor_sum(n, p, q, m)))
        << n << ' ' << p << ' ' << q << ' ' << m;
  }
}

TEST(FloorSum, BigIntegerPathMatchesNaiveLoop) {
  // Coefficients beyond 2^40 force the arbitrary-precision reduction.
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<std::int64_t> small(0, 3000);
  for (int i = 0; i < 200; ++i) {
    const std::int64_t n = small(rng);
    const std::int64_t p = (std::int64_t{1} << 45) + small(rng) * 977;
    const std::int64_t q = (std::int64_t{1} << 50) + small(rng);
    const std::int64_t m = (std::int64_t{1} << 42) + small(rng) * 13 + 1;
    ASSERT_EQ(floor_sum(n, p, q, m), to_big(oracle::floor_sum(n, p, q, m)));
  }
}

TEST(FloorSum, NativeAndBigPathsAgreeAtTheBoundary) {
  const BigInt limit = BigInt(1) << 40;
  for (const BigInt& n : std::vector<BigInt>{BigInt(1000), limit - 1, limit, limit + 1}) {
    const BigInt p = limit - 3;
    const BigInt q = limit - 7;
    const BigInt m = limit - 11;
    // Splitting the index range in half must give the same total; the second
    // half starts from an offset well above the native limit.
    const BigInt whole = floor_sum(n, p, q, m);
    const BigInt half = n / 2;
    const BigInt split = floor_sum(half, p, q, m) + floor_sum(n - half, p, q + p * half, m);
    EXPECT_EQ(whole, split);
  }
}

TEST(FloorSum, RejectsBadArguments) {
  EXPECT_THROW(floor_sum(-1, 1, 1, 1), std::invalid_argument);
  EXPECT_THROW(floor_sum(1, -1, 1, 1), std::invalid_argument);
  EXPECT_THROW(floor_sum(1, 1, -1, 1), std::invalid_argument);
  EXPECT_THROW(floor_sum(1, 1, 1, 0), std::invalid_argument);
}
