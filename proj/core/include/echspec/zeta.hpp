#pragma once

/**
 * @file zeta.hpp
 * @brief Hurwitz, Riemann, Barnes and ECH zeta functions of ellipsoids.
 *
 * All continuations are by Euler-Maclaurin summation. The Hurwitz kernel is
 *
 *   zeta(s, x) = sum_{i<M} (x+i)^{-s} + (x+M)^{1-s}/(s-1) + (x+M)^{-s}/2
 *              + sum_k B_{2k}/(2k)! (s)_{2k-1} (x+M)^{-s-2k+1},
 *
 * with M chosen so that x + M exceeds a shift proportional to |s|. The Barnes
 * double zeta sums the Hurwitz kernel along one lattice direction for a few
 * rows, then replaces the remaining rows by the large-x expansion of the
 * kernel, which sums in closed form to Hurwitz values at a shifted argument.
 *
 * Three summation conventions over the lattice (m, n) >= 0 are exposed:
 *
 *  - Interior: m, n >= 1.
 *  - Full: every lattice point except the origin (one term per ECH class).
 *  - Distinct: each nonzero spectrum value once.
 *
 * Interior and Full are expressed through Barnes and Riemann zeta values.
 * Distinct uses the unique representation m*A + n*B with 0 <= n < A/gcd(A,B),
 * which turns it into a finite sum of Hurwitz rows.
 */

#include <complex>
#include <functional>

#include "echspec/rational.hpp"
#include "echspec/spectrum.hpp"

namespace echspec {

using ComplexVal = std::complex<double>;

enum class ZetaConvention { Interior, Full, Distinct };

const char* to_string(ZetaConvention c);
// Accepts "interior", "full", "distinct". Throws std::invalid_argument.
ZetaConvention parse_convention(std::string_view name);

struct ZetaOptions {
  // Evaluation requires Re(s) > -s_max.
  double s_max = 4.0;
  // Target relative accuracy away from poles.
  double tol = 1e-10;
  // Euler-Maclaurin tails start once the argument exceeds em_shift + |s|.
  double em_shift = 8.0;
  // |s - pole| below this raises PoleProximity.
  double pole_guard = 1e-6;
};

// Exact Bernoulli number B_k with B_1 = -1/2, for 0 <= k <= 64.
Rational bernoulli(int k);

// sum_{n>=0} (x+n)^{-s}, continued to Re(s) > -s_max. Requires x > 0.
ComplexVal hurwitz_zeta(ComplexVal s, double x, const ZetaOptions& opts = {});

ComplexVal riemann_zeta(ComplexVal s, const ZetaOptions& opts = {});

// sum_{m,n>=0} (w + m*a + n*b)^{-s}, continued; simple poles at s = 1, 2.
ComplexVal barnes_zeta(ComplexVal s, const Rational& w, const Ellipsoid& e,
                       const ZetaOptions& opts = {});

// ECH zeta function of E(a, b) under the chosen convention.
ComplexVal ech_zeta(ComplexVal s, const Ellipsoid& e, ZetaConvention conv,
                    const ZetaOptions& opts = {});

struct DirectSum {
  ComplexVal value;
  // Rigorous bound on |sum of the omitted terms|.
  double tail_bound = 0.0;
  // Values <= cutoff were summed; cutoff = nth_capacity(e, j_max).
  Rational cutoff;
  BigInt terms;
};

// Partial sum of the defining series over every lattice point (per
// convention) with value in (0, nth_capacity(e, j_max)], so that classes tied
// with c_{j_max} are included in full. The tail bound integrates the exact
// count against the envelope N(t) <= (t + a + b)^2 / (2ab). Requires
// Re(s) > 2 + margin.
DirectSum direct_zeta_sum(const Ellipsoid& e, ComplexVal s, const BigInt& j_max,
                          ZetaConvention conv, double margin = 0.25);

namespace detail {

inline constexpr int kEulerMaclaurinTerms = 32;

// B_{2k} / (2k)! for 1 <= k <= kEulerMaclaurinTerms.
double em_coefficient(int k);

// zeta(s, x) - 1/(s-1); entire in s. No depth or pole checks.
ComplexVal hurwitz_regular(ComplexVal s, double x, const ZetaOptions& opts);

// zeta(s, x) itself, for s away from 1. No depth or pole checks.
ComplexVal hurwitz_full(ComplexVal s, double x, const ZetaOptions& opts);

// Double-precision Barnes zeta with no argument checks; a, b, w > 0.
ComplexVal barnes_zeta_unchecked(ComplexVal s, double w, double a, double b,
                                 const ZetaOptions& opts);

// sum_{n=0}^{rows-1} sum_{m>=0} (w + n*b + m*a)^{-s}, continued. rows may be huge.
ComplexVal barnes_rows(ComplexVal s, double w, double a, double b, double rows,
                       const ZetaOptions& opts);

}  // namespace detail

}  // namespace echspec
