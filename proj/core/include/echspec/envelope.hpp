#pragma once

/**
 * @file envelope.hpp
 * @brief Numerical form of the energy bound cascade that yields
 * c_j = sqrt(j vol) + O(j^{2/5}).
 *
 * The constants are not derivable from geometry here; they are inputs with
 * defaults q = 0, c0 = c1 = c2 = vol = 1, and c3 is always recomputed from c1.
 */

#include <limits>

namespace echspec {

struct EnvelopeConstants {
  double q = 0.0;
  double c0 = 1.0;
  double c1 = 1.0;
  double c2 = 1.0;
  double vol = 1.0;

  // 1 + 3(2c1/3) + 3(2c1/3)^2.
  double c3() const;
  // Throws std::invalid_argument unless c0 >= 0, c1, c2, vol > 0 and all finite.
  // c2 = 0 is accepted so the degenerate bounds can be inspected.
  void validate() const;
};

struct FBounds {
  double F_lo;
  double F_hi;
  double Fp_lo;
  double Fp_hi;
};

struct EnvelopeResult {
  double j;
  double r1;
  double r2;
  double r3;
  double F_lo;
  double F_hi;
  double e_lo;
  double e_hi;
  double c_lo;
  double c_hi;
};

// Larger root of r^2 vol/(4 pi^2) - c0 r - (q + j) = 0. Throws NoRoot when
// q + j < -c0^2 pi^2 / vol.
double r1_bar(double j, const EnvelopeConstants& k);

// Root in (0, 1) of rho + rho^2 + rho^3 + rho^4 = 1/3.
double rho_zero();

// Sub/supersolution bounds on F(r) and F'(r). Requires r >= r1_bar(j, k).
FBounds F_bounds(double r, double j, const EnvelopeConstants& k);

// Upper limit of the sup searches; a defining set still nonempty here raises
// NonConvergent.
inline constexpr double kSupSearchLimit = 1e12;

// r_bar_2: sup{r : c1 r^{-2/3} F_hi^{1/3} >= rho_0}.
double r2_bar(double j, const EnvelopeConstants& k);
// r_tilde_2: sup of the union of the three growth conditions on F'_hi and F_hi/r.
double r2_tilde(double j, const EnvelopeConstants& k);
// max(r2_bar, r2_tilde).
double r2_threshold(double j, const EnvelopeConstants& k);

// The cascade at r3 = j^{4/5} without the admissibility check.
EnvelopeResult envelope_bounds(double j, const EnvelopeConstants& k);

// Smallest j >= 1 (to relative 1e-9) with j^{4/5} >= r2_threshold(j, k), or
// NaN if none exists before the sup searches stop converging.
double min_admissible_j(const EnvelopeConstants& k);

// envelope_bounds guarded by j^{4/5} >= r2_threshold(j, k); throws TooSmallJ
// carrying min_admissible_j otherwise.
EnvelopeResult capacity_envelope(double j, const EnvelopeConstants& k);

}  // namespace echspec
