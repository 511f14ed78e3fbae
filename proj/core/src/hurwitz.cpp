#include <algorithm>
#include <array>
#include <complex>
#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

#include "echspec/errors.hpp"
#include "echspec/zeta.hpp"

namespace echspec {
namespace {

constexpr int kMaxBernoulli = 64;
constexpr int kMaxTerms = kMaxBernoulli / 2;

const std::vector<Rational>& bernoulli_table() {
  static const std::vector<Rational> table = [] {
    // sum_{i=0}^{k} C(k+1, i) B_i = 0 for k >= 1.
    std::vector<Rational> b(kMaxBernoulli + 1);
    b[0] = Rational(1);
    for (int k = 1; k <= kMaxBernoulli; ++k) {
      Rational acc;
      BigInt binom = 1;  // C(k+1, 0)
      for (int i = 0; i < k; ++i) {
        acc += Rational(binom) * b[i];
        binom = binom * (k + 1 - i) / (i + 1);
      }
      b[k] = -acc / Rational(k + 1);
    }
    return b;
  }();
  return table;
}

// B_{2k}/(2k)! to extended precision: the double nearest to the exact ratio
// plus the double nearest to what remains.
const std::array<long double, kMaxTerms + 1>& em_table() {
  static const std::array<long double, kMaxTerms + 1> coef = [] {
    std::array<long double, kMaxTerms + 1> c{};
    BigInt fact = 1;
    for (int k = 1; k <= kMaxTerms; ++k) {
      fact *= (2 * k - 1) * (2 * k);
      const Rational exact = bernoulli_table()[2 * k] / Rational(fact);
      const double hi = exact.to_double();
      const double lo = mpq_class(exact.raw() - mpq_class(hi)).get_d();
      c[k] = static_cast<long double>(hi) + lo;
    }
    return c;
  }();
  return coef;
}

// (e^u - 1) / u, accurate near u = 0.
ComplexVal expm1_over(ComplexVal u) {
  if (std::abs(u) < 1e-2) {
    ComplexVal term = 1.0;
    ComplexVal sum = 1.0;
    for (int n = 2; n <= 9; ++n) {
      term *= u / static_cast<double>(n);
      sum += term;
    }
    return sum;
  }
  return (std::exp(u) - 1.0) / u;
}

void require_finite(ComplexVal s) {
  if (!std::isfinite(s.real()) || !std::isfinite(s.imag())) {
    throw std::invalid_argument("zeta argument is not finite");
  }
}

// Euler-Maclaurin evaluation of zeta(s, x). With keep_pole the integral term
// is y^{1-s}/(s-1); otherwise (y^{1-s} - 1)/(s-1), which stays finite at s = 1
// but cancels badly against the rest once Re(s) is large.
ComplexVal em_hurwitz(ComplexVal s, double x, const ZetaOptions& opts, bool keep_pole) {
  const auto& coef = em_table();
  const double shift = opts.em_shift + std::abs(s);
  const int m = x < shift ? static_cast<int>(std::ceil(shift - x)) : 0;

  // For Re(s) < 0 the head, the integral and the first correction terms are
  // large and nearly cancel, so everything is carried in extended precision.
  using Wide = std::complex<long double>;
  const Wide ws(s);
  Wide head = 0.0L;
  for (int i = 0; i < m; ++i) head += std::exp(-ws * std::log(static_cast<long double>(x) + i));

  const long double y = static_cast<long double>(x) + m;
  const long double log_y = std::log(y);
  const Wide y_pow = std::exp(-ws * log_y);
  const Wide integral =
      keep_pole ? y_pow * y / (ws - 1.0L)
                : Wide(-static_cast<double>(log_y) * expm1_over((1.0 - s) * static_cast<double>(log_y)));

  Wide sum = head + integral + 0.5L * y_pow;
  long double scale = std::max({std::abs(head), std::abs(integral), std::abs(y_pow)});
  Wide rising = ws;          // (s)_{2k-1}
  Wide power = y_pow / y;    // y^{-s-2k+1}
  const long double cutoff = std::min(opts.tol, 1e-8) * 1e-6;
  for (int k = 1; k <= kMaxTerms; ++k) {
    const Wide term = coef[k] * rising * power;
    sum += term;
    scale = std::max(scale, std::abs(term));
    if (std::abs(term) <= cutoff * scale) break;
    rising *= (ws + (2.0L * k - 1.0L)) * (ws + 2.0L * k);
    power /= y * y;
  }
  return ComplexVal(sum);
}

}  // namespace

Rational bernoulli(int k) {
  if (k < 0 || k > kMaxBernoulli) {
    throw std::invalid_argument("bernoulli: index must lie in [0, 64], got " + std::to_string(k));
  }
  return bernoulli_table()[static_cast<std::size_t>(k)];
}

namespace detail {

double em_coefficient(int k) { return static_cast<double>(em_table().at(static_cast<std::size_t>(k))); }

ComplexVal hurwitz_regular(ComplexVal s, double x, const ZetaOptions& opts) {
  return em_hurwitz(s, x, opts, false);
}

ComplexVal hurwitz_full(ComplexVal s, double x, const ZetaOptions& opts) {
  return em_hurwitz(s, x, opts, true);
}

}  // namespace detail

ComplexVal hurwitz_zeta(ComplexVal s, double x, const ZetaOptions& opts) {
  require_finite(s);
  if (!(x > 0.0) || !std::isfinite(x)) throw std::invalid_argument("hurwitz_zeta: x must be positive");
  if (std::abs(s - 1.0) < opts.pole_guard) throw PoleProximity("hurwitz_zeta: s is at the pole s = 1");
  if (s.real() <= -opts.s_max) {
    throw DepthExceeded("hurwitz_zeta: Re(s) beyond the continuation depth");
  }
  if (std::abs(s - 1.0) > 0.5) return detail::hurwitz_full(s, x, opts);
  return detail::hurwitz_regular(s, x, opts) + 1.0 / (s - 1.0);
}

ComplexVal riemann_zeta(ComplexVal s, const ZetaOptions& opts) { return hurwitz_zeta(s, 1.0, opts); }

}  // namespace echspec
