#include <cmath>
#include <stdexcept>
#include <vector>

#include <gtest/gtest.h>

#include "echspec/asymptotics.hpp"
#include "oracles.hpp"

using echspec::BigInt;
using echspec::DkPoint;
using echspec::Ellipsoid;
using echspec::Rational;

namespace {

Ellipsoid E(const char* a, const char* b) { return Ellipsoid(Rational::parse(a), Rational::parse(b)); }

std::vector<DkPoint> synthetic(double (*f)(double), long j1) {
  std::vector<DkPoint> pts;
  for (long j = 1; j <= j1; ++j) pts.push_back({BigInt(j), Rational(0), f(static_cast<double>(j)), 0.0});
  return pts;
}

}  // namespace

TEST(ContactVolume, IsProductOfParameters) {
  EXPECT_EQ(echspec::contact_volume(E("1", "1")), Rational(1));
  EXPECT_EQ(echspec::contact_volume(E("1", "2")), Rational(2));
  const Rational lambda = Rational::parse("3/2");
  EXPECT_EQ(echspec::contact_volume(Ellipsoid(lambda * 3, lambda * 7)), lambda * lambda * 21);
}

TEST(DSequence, DocumentedExamples) {
  const auto d0 = echspec::d_sequence(E("1", "1"), 0, 0);
  ASSERT_EQ(d0.size(), 1u);
  EXPECT_EQ(d0[0].d, 0.0);
  const auto d3 = echspec::d_sequence(E("1", "1"), 3, 3);
  EXPECT_EQ(d3[0].c, Rational(2));
  EXPECT_NEAR(d3[0].d, 2.0 - std::sqrt(6.0), 1e-15);
  EXPECT_THROW(echspec::d_sequence(E("1", "1"), 4, 3), std::invalid_argument);
}

TEST(DSequence, ErrorBoundAgainstFiftyDigitArithmetic) {
  for (const auto& [a, b] : {std::pair{"1", "1"}, {"3", "7"}, {"1", "832040/514229"}}) {
    const auto e = E(a, b);
    const oracle::Float50 vol(oracle::rat(a) * oracle::rat(b));
    for (const auto& p : echspec::d_sequence(e, 99000, 100000)) {
      const oracle::Float50 c(oracle::rat(p.c.to_string()));
      const oracle::Float50 exact = c - sqrt(vol * 2 * oracle::Float50(p.j.get_str()));
      const double err = std::abs(static_cast<double>(exact - oracle::Float50(p.d)));
      ASSERT_LE(err, p.d_err) << a << ' ' << b << " j=" << p.j;
      ASSERT_LE(p.d_err, std::ldexp(1.0, -40) * std::max(1.0, p.c.to_double()));
    }
  }
}

TEST(DSequence, PrecomputedCapacitiesGiveIdenticalPoints) {
  const auto e = E("5/3", "7/4");
  const auto direct = echspec::d_sequence(e, 500, 900);
  std::vector<Rational> caps;
  for (const auto& p : direct) caps.push_back(p.c);
  const auto again = echspec::d_sequence(e, 500, caps);
  ASSERT_EQ(again.size(), direct.size());
  for (std::size_t i = 0; i < direct.size(); ++i) {
    EXPECT_EQ(again[i].j, direct[i].j);
    EXPECT_EQ(again[i].d, direct[i].d);
  }
  caps[3] = Rational::parse("1/1000");
  EXPECT_THROW(echspec::d_sequence(e, 500, caps), std::invalid_argument);
}

TEST(DSequence, UnitBallDefectRange) {
  // Blocks of E(1,1) start at j = t(t+1)/2, where d = t - sqrt(t^2 + t) lies just
  // above -1/2, and end one before (t+1)(t+2)/2, where d approaches -3/2.
  const auto pts = echspec::d_sequence(E("1", "1"), 1, 100000);
  for (const auto& p : pts) {
    const double t = p.c.to_double();
    ASSERT_LE(p.d, -0.5 + 1.0 / (8.0 * t) + 1e-12) << p.j;
    ASSERT_GE(p.d, -1.5) << p.j;
  }
}

TEST(WeylCount, DocumentedExamples) {
  auto w = echspec::weyl_count(E("1", "1"), Rational(0));
  EXPECT_EQ(w.count_classes, 1);
  EXPECT_EQ(w.count_values, 1);
  w = echspec::weyl_count(E("1", "1"), Rational(10));
  EXPECT_EQ(w.count_classes, 66);
  EXPECT_EQ(w.count_values, 11);
  w = echspec::weyl_count(E("1", "2"), Rational(4));
  EXPECT_EQ(w.count_classes, 9);
  EXPECT_EQ(w.count_values, 5);
  EXPECT_THROW(echspec::weyl_count(E("1", "1"), Rational(-1)), std::invalid_argument);
}

TEST(WeylCount, ClassesMatchEnumerationUpTo200) {
  for (const auto& [a, b] : {std::pair{"1", "1"}, {"1", "2"}, {"3", "7"}, {"1", "665857/470832"}}) {
    const auto e = E(a, b);
    BigInt prev_classes = 0, prev_values = 0;
    for (long R = 0; R <= 200; R += 5) {
      const auto w = echspec::weyl_count(e, Rational(R));
      ASSERT_EQ(w.count_classes.get_str(), oracle::count_leq(oracle::rat(a), oracle::rat(b), oracle::Rat(R)).str());
      EXPECT_LE(w.count_values, w.count_classes);
      EXPECT_GE(w.count_classes, prev_classes);
      EXPECT_GE(w.count_values, prev_values);
      prev_classes = w.count_classes;
      prev_values = w.count_values;
    }
  }
}

TEST(WeylFit, RecoversInverseTwiceVolume) {
  std::vector<Rational> radii;
  for (long R = 10; R <= 1000; R += 10) radii.emplace_back(R);
  const auto unit = echspec::weyl_fit(E("1", "1"), radii);
  EXPECT_NEAR(unit.coefficient, 0.5, 0.5 * 0.02);
  EXPECT_LE(unit.exponent, 1.05);
  EXPECT_GE(unit.residual, 0.0);
  const auto e12 = echspec::weyl_fit(E("1", "2"), radii);
  EXPECT_NEAR(e12.coefficient, 0.25, 0.25 * 0.02);
  EXPECT_LE(e12.exponent, 1.05);
}

TEST(WeylFit, RejectsBadSamples) {
  const std::vector<Rational> two = {Rational(1), Rational(2)};
  EXPECT_THROW(echspec::weyl_fit(E("1", "1"), two), std::invalid_argument);
  const std::vector<Rational> unsorted = {Rational(1), Rational(3), Rational(2)};
  EXPECT_THROW(echspec::weyl_fit(E("1", "1"), unsorted), std::invalid_argument);
}

TEST(ExponentFit, RecoversPlantedExponents) {
  const auto power = synthetic([](double j) { return std::pow(j, 0.4); }, 1 << 16);
  EXPECT_NEAR(echspec::exponent_fit(power, 6).exponent, 0.4, 0.01);
  const auto flat = synthetic([](double) { return 1.3; }, 1 << 16);
  EXPECT_NEAR(echspec::exponent_fit(flat, 6).exponent, 0.0, 0.01);
}

TEST(ExponentFit, RejectsEmptyOrUnsortedInput) {
  EXPECT_THROW(echspec::exponent_fit({}, 4), std::invalid_argument);
  std::vector<DkPoint> pts = {{BigInt(5), Rational(0), 1.0, 0.0}, {BigInt(4), Rational(0), 1.0, 0.0}};
  EXPECT_THROW(echspec::exponent_fit(pts, 2), std::invalid_argument);
}

TEST(ExponentFit, EllipsoidDefectsAreBounded) {
  for (const auto& [a, b] : {std::pair{"1", "1"}, {"1", "2"}, {"3", "7"}, {"1", "832040/514229"}}) {
    const auto pts = echspec::d_sequence(E(a, b), 1, 1 << 18);
    EXPECT_LE(echspec::exponent_fit(pts, 6).exponent, 0.05) << a << ' ' << b;
  }
}

TEST(WindowSups, ScaledSupNonincreasingPastOneThousand) {
  for (const auto& [a, b] : {std::pair{"1", "1"}, {"1", "2"}, {"3", "7"}, {"1", "832040/514229"}}) {
    const auto pts = echspec::d_sequence(E(a, b), 1, 1 << 18);
    const auto windows = echspec::window_sups(pts);
    double prev = INFINITY;
    for (const auto& w : windows) {
      if ((1L << w.w) < 1000) continue;
      const double scaled = w.sup_abs_d / std::pow(static_cast<double>(w.j_at_max), 0.4);
      EXPECT_LE(scaled, prev) << a << ' ' << b << " window " << w.w;
      prev = scaled;
    }
  }
}
