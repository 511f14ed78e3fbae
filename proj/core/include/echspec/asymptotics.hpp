#pragma once

// Sub-leading behaviour of the ellipsoid spectrum: the defect sequence
// d_j = c_j - sqrt(vol * 2j), Weyl counts and their fits, and power-law
// exponent estimates over geometric index windows.

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "echspec/rational.hpp"
#include "echspec/spectrum.hpp"

namespace echspec {

// The contact volume of the boundary of E(a, b), i.e. a*b.
Rational contact_volume(const Ellipsoid& e);

// One sample of the defect sequence. The grading of sigma_j is 2j.
struct DkPoint {
  BigInt j;
  Rational c;    // capacity c_{sigma_j}, exact
  double d;      // c - sqrt(vol * 2j)
  double d_err;  // certified bound on |d - exact defect|
};

// d_j for j in [j0, j1]. The square root is taken on exact integers with
// 64 extra fractional bits, so d_err stays at the level of one double ulp.
std::vector<DkPoint> d_sequence(const Ellipsoid& e, const BigInt& j0, const BigInt& j1);

// The same defects for precomputed capacities c_{j0}, c_{j0+1}, ... (for
// example read back from a spectrum cache). The capacities are not re-derived.
std::vector<DkPoint> d_sequence(const Ellipsoid& e, const BigInt& j0, std::span<const Rational> capacities);

struct WeylSample {
  Rational R;
  BigInt count_classes;  // one per lattice point (ECH class)
  BigInt count_values;   // distinct spectrum values
};

// Throws std::invalid_argument for R < 0.
WeylSample weyl_count(const Ellipsoid& e, const Rational& R);

struct FitResult {
  double coefficient = 0.0;
  double exponent = 0.0;
  double residual = 0.0;
  std::pair<std::int64_t, std::int64_t> window{0, 0};
};

// Least-squares fit of the class count N(R) on the basis {R^2, R, 1};
// coefficient is the R^2 term. exponent is the log-log slope of
// |N(R) - coefficient*R^2| against R, skipping remainders within ten rounding
// units of zero. residual is the RMS of the quadratic fit; window holds the
// first and last sample index used. Needs >= 3 strictly increasing R.
FitResult weyl_fit(const Ellipsoid& e, std::span<const Rational> radii);

// Window statistics used by exponent_fit: max |d_j| over each geometric
// window [2^w, 2^{w+1}) together with the index attaining it.
struct WindowSup {
  int w = 0;
  std::int64_t j_at_max = 0;
  double sup_abs_d = 0.0;
};

// Windows covering the points with j >= 1, in increasing order of w.
std::vector<WindowSup> window_sups(std::span<const DkPoint> points);

// Regresses log(sup |d|) on log(j_at_max) over the last `window_count`
// nonempty geometric windows. Points with j = 0 are ignored. coefficient is
// exp(intercept); residual is the RMS of the log-log fit. Throws
// std::invalid_argument for empty input, non-increasing j, or when fewer than
// two windows are available.
FitResult exponent_fit(std::span<const DkPoint> points, int window_count);

}  // namespace echspec
