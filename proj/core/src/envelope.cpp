#include "echspec/envelope.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numbers>
#include <stdexcept>
#include <string>

#include "echspec/errors.hpp"

namespace echspec {
namespace {

constexpr double kPi = std::numbers::pi;

void require_j(double j) {
  if (!(j >= 0.0) || !std::isfinite(j)) throw std::invalid_argument("envelope: j must be finite and >= 0");
}

// sup{r >= r1 : pred(r)}. The set is scanned on r1 * 2^i, the last true grid
// point is followed by bisection against the next (false) one. Returns r1 when
// the set is empty on the grid.
double sup_of(const std::function<bool(double)>& pred, double r1, const char* who) {
  double last_true = std::numeric_limits<double>::quiet_NaN();
  double r = r1;
  while (r <= kSupSearchLimit) {
    if (pred(r)) last_true = r;
    r *= 2.0;
  }
  if (std::isnan(last_true)) return r1;
  double lo = last_true;
  double hi = 2.0 * last_true;
  if (hi > kSupSearchLimit) {
    throw NonConvergent(std::string(who) + ": defining set extends past " +
                        std::to_string(kSupSearchLimit));
  }
  for (int i = 0; i < 200 && hi - lo > 1e-14 * hi; ++i) {
    const double mid = 0.5 * (lo + hi);
    (pred(mid) ? lo : hi) = mid;
  }
  return lo;
}

}  // namespace

double EnvelopeConstants::c3() const {
  const double t = 2.0 * c1 / 3.0;
  return 1.0 + 3.0 * t + 3.0 * t * t;
}

void EnvelopeConstants::validate() const {
  const bool finite = std::isfinite(q) && std::isfinite(c0) && std::isfinite(c1) &&
                      std::isfinite(c2) && std::isfinite(vol);
  if (!finite || c0 < 0.0 || !(c1 > 0.0) || c2 < 0.0 || !(vol > 0.0)) {
    throw std::invalid_argument("envelope constants: need c0 >= 0, c1 > 0, c2 >= 0, vol > 0");
  }
}

double r1_bar(double j, const EnvelopeConstants& k) {
  require_j(j);
  k.validate();
  const double qj = k.q + j;
  const double disc = k.c0 * k.c0 + k.vol * qj / (kPi * kPi);
  if (disc < 0.0) throw NoRoot("r1_bar: q + j < -c0^2 pi^2 / vol");
  // Larger root; c0 >= 0 so no cancellation occurs.
  return 2.0 * kPi * kPi / k.vol * (k.c0 + std::sqrt(disc));
}

double rho_zero() {
  auto f = [](double r) { return r + r * r + r * r * r + r * r * r * r; };
  double lo = 0.0;
  double hi = 1.0;
  while (hi - lo > 1e-15) {
    const double mid = 0.5 * (lo + hi);
    (f(mid) < 1.0 / 3.0 ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

FBounds F_bounds(double r, double j, const EnvelopeConstants& k) {
  const double r1 = r1_bar(j, k);
  if (!(r1 > 0.0)) throw std::invalid_argument("F_bounds: r1_bar must be positive");
  if (!(r >= r1) || !std::isfinite(r)) throw std::invalid_argument("F_bounds: requires r >= r1_bar(j)");
  const double qj = k.q + j;
  const double base = 0.5 * r1 * r1 * k.vol;
  const double sr = std::sqrt(r);
  const double sr1 = std::sqrt(r1);
  FBounds b;
  b.F_lo = base + r * (qj / r1 - qj / r - 2.0 * k.c2 * sr + 2.0 * k.c2 * sr1);
  b.F_hi = base + r * (qj / r1 - qj / r + 2.0 * k.c2 * sr - 2.0 * k.c2 * sr1);
  b.Fp_lo = base / r + qj / r1 - 3.0 * k.c2 * sr + 2.0 * k.c2 * sr1;
  b.Fp_hi = base / r + qj / r1 + 3.0 * k.c2 * sr - 2.0 * k.c2 * sr1;
  return b;
}

double r2_bar(double j, const EnvelopeConstants& k) {
  const double r1 = r1_bar(j, k);
  const double rho0 = rho_zero();
  auto pred = [&](double r) {
    return k.c1 * std::pow(r, -2.0 / 3.0) * std::cbrt(F_bounds(r, j, k).F_hi) >= rho0;
  };
  return sup_of(pred, r1, "r2_bar");
}

double r2_tilde(double j, const EnvelopeConstants& k) {
  const double r1 = r1_bar(j, k);
  const double kappa = std::pow(3.0 / (4.0 * k.c1), 3);
  const double mu = std::pow(1.0 / (9.0 * k.c3()), 3);
  auto pred = [&](double r) {
    const auto b = F_bounds(r, j, k);
    const double f_over_r = b.F_hi / r;
    return b.Fp_hi >= kappa * r || f_over_r >= mu * r || f_over_r >= r;
  };
  return sup_of(pred, r1, "r2_tilde");
}

double r2_threshold(double j, const EnvelopeConstants& k) {
  require_j(j);
  return std::max(r2_bar(j, k), r2_tilde(j, k));
}

EnvelopeResult envelope_bounds(double j, const EnvelopeConstants& k) {
  require_j(j);
  const double r1 = r1_bar(j, k);
  const double r2 = r2_threshold(j, k);
  const double r3 = std::pow(j, 0.8);
  const auto fb = F_bounds(r3, j, k);
  const double qj = k.q + j;
  const double upper = 0.5 * r1 * r1 * k.vol / r3 + qj / r1 + 2.0 * k.c2 * std::sqrt(r3);
  const double lower = qj / r1 - qj / r3 - 2.0 * k.c2 * std::sqrt(r3);
  const double R = 4.0 * k.c3() / std::cbrt(r3) * std::cbrt(upper);

  EnvelopeResult out;
  out.j = j;
  out.r1 = r1;
  out.r2 = r2;
  out.r3 = r3;
  out.F_lo = fb.F_lo;
  out.F_hi = fb.F_hi;
  out.e_lo = lower * (1.0 - R);
  out.e_hi = upper * (1.0 + R);
  out.c_lo = out.e_lo / (2.0 * kPi);
  out.c_hi = out.e_hi / (2.0 * kPi);
  return out;
}

namespace {

bool admissible(double j, const EnvelopeConstants& k) {
  try {
    return std::pow(j, 0.8) >= r2_threshold(j, k);
  } catch (const NoRoot&) {
    return false;
  } catch (const std::invalid_argument&) {
    // r3 below r1: F_bounds cannot be evaluated, so j is not admissible.
    return false;
  }
}

}  // namespace

double min_admissible_j(const EnvelopeConstants& k) {
  k.validate();
  double prev = 1.0;
  if (admissible(prev, k)) return prev;
  double next = 2.0;
  try {
    while (!admissible(next, k)) {
      prev = next;
      next *= 2.0;
      if (next > 1e30) return std::numeric_limits<double>::quiet_NaN();
    }
  } catch (const NonConvergent&) {
    return std::numeric_limits<double>::quiet_NaN();
  }
  while (next - prev > 1e-9 * next) {
    const double mid = std::sqrt(prev * next);
    (admissible(mid, k) ? next : prev) = mid;
  }
  return next;
}

EnvelopeResult capacity_envelope(double j, const EnvelopeConstants& k) {
  require_j(j);
  k.validate();
  if (!admissible(j, k)) {
    const double jmin = min_admissible_j(k);
    throw TooSmallJ("capacity_envelope: j = " + std::to_string(j) +
                        " violates j^(4/5) >= r2_threshold(j); minimal admissible j is " +
                        std::to_string(jmin),
                    jmin);
  }
  return envelope_bounds(j, k);
}

}  // namespace echspec
