#include "echspec/zeta.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "echspec/errors.hpp"

namespace echspec {
namespace {

void check_argument(ComplexVal s, const ZetaOptions& opts, const char* who) {
  if (!std::isfinite(s.real()) || !std::isfinite(s.imag())) {
    throw std::invalid_argument(std::string(who) + ": s is not finite");
  }
  if (std::abs(s - 1.0) < opts.pole_guard || std::abs(s - 2.0) < opts.pole_guard) {
    throw PoleProximity(std::string(who) + ": s is at a pole (s = 1 or s = 2)");
  }
  if (s.real() <= -opts.s_max) {
    throw DepthExceeded(std::string(who) + ": Re(s) beyond the continuation depth");
  }
}

ComplexVal riemann_unchecked(ComplexVal s, const ZetaOptions& opts) {
  return detail::hurwitz_regular(s, 1.0, opts) + 1.0 / (s - 1.0);
}

// Row tail of the Barnes sum: sum_{n>=N} a^{-s} zeta_asym(s, (w + n*b)/a), with
// y = N + w/b, minus its y-independent pole part (see tail_pole).
ComplexVal tail_regular(ComplexVal s, double a, double b, double y, const ZetaOptions& opts) {
  const double log_rho = std::log(b / a);
  const ComplexVal sm1 = s - 1.0;

  ComplexVal sum = std::exp((1.0 - s) * log_rho) / sm1 * detail::hurwitz_regular(sm1, y, opts) +
                   0.5 * std::exp(-s * log_rho) * detail::hurwitz_regular(s, y, opts);
  double scale = std::abs(sum);
  ComplexVal rising_lo = 1.0;  // (s)_{2k-2}
  ComplexVal rising_hi = s;    // (s)_{2k-1}
  const double cutoff = std::min(opts.tol, 1e-8) * 1e-6;
  for (int k = 1; k <= detail::kEulerMaclaurinTerms; ++k) {
    const ComplexVal p = s + (2.0 * k - 1.0);
    // (s)_{2k-1} zeta(p, y). Near p = 1 the pole of zeta cancels against the
    // zero of (s)_{2k-1} and is removed analytically; elsewhere that route would
    // subtract factorially large terms, so zeta(p, y) is used directly.
    const ComplexVal hz = std::abs(p - 1.0) <= 0.5 ? rising_hi * detail::hurwitz_regular(p, y, opts) + rising_lo
                                                   : rising_hi * detail::hurwitz_full(p, y, opts);
    const ComplexVal term = detail::em_coefficient(k) * std::exp(-p * log_rho) * hz;
    sum += term;
    scale = std::max(scale, std::abs(term));
    if (std::abs(term) <= cutoff * scale) break;
    rising_lo = rising_hi * (s + (2.0 * k - 1.0));
    rising_hi = rising_lo * (s + 2.0 * k);
  }
  return std::exp(-s * std::log(a)) * sum;
}

ComplexVal tail_pole(ComplexVal s, double a, double b) {
  const double log_rho = std::log(b / a);
  const ComplexVal sm1 = s - 1.0;
  return std::exp(-s * std::log(a)) * (std::exp((1.0 - s) * log_rho) / (sm1 * (s - 2.0)) +
                                       0.5 * std::exp(-s * log_rho) / sm1);
}

ComplexVal pairwise_sum(std::span<const ComplexVal> v) {
  if (v.size() <= 16) {
    ComplexVal acc = 0.0;
    for (const auto& x : v) acc += x;
    return acc;
  }
  const std::size_t half = v.size() / 2;
  return pairwise_sum(v.first(half)) + pairwise_sum(v.subspan(half));
}

}  // namespace

const char* to_string(ZetaConvention c) {
  switch (c) {
    case ZetaConvention::Interior:
      return "interior";
    case ZetaConvention::Full:
      return "full";
    case ZetaConvention::Distinct:
      return "distinct";
  }
  return "unknown";
}

ZetaConvention parse_convention(std::string_view name) {
  if (name == "interior") return ZetaConvention::Interior;
  if (name == "full") return ZetaConvention::Full;
  if (name == "distinct") return ZetaConvention::Distinct;
  throw std::invalid_argument("unknown zeta convention '" + std::string(name) + "'");
}

namespace detail {

ComplexVal barnes_rows(ComplexVal s, double w, double a, double b, double rows,
                       const ZetaOptions& opts) {
  if (rows <= 0.0) return 0.0;
  const double shift = opts.em_shift + std::abs(s);
  // Rows n >= first have (w + n*b)/a >= shift, where the large-x expansion applies.
  const double first = std::max(1.0, std::ceil((shift * a - w) / b));
  const double direct_rows = std::min(first, rows);

  const ComplexVal a_pow = std::exp(-s * std::log(a));
  const ComplexVal pole = 1.0 / (s - 1.0);
  ComplexVal sum = 0.0;
  const bool near_pole = std::abs(s - 1.0) <= 0.5;
  for (double n = 0.0; n < direct_rows; n += 1.0) {
    const double x = (w + n * b) / a;
    sum += a_pow * (near_pole ? hurwitz_regular(s, x, opts) + pole : hurwitz_full(s, x, opts));
  }
  if (rows <= first) return sum;

  sum += tail_regular(s, a, b, first + w / b, opts);
  if (std::isinf(rows)) return sum + tail_pole(s, a, b);
  return sum - tail_regular(s, a, b, rows + w / b, opts);
}

ComplexVal barnes_zeta_unchecked(ComplexVal s, double w, double a, double b,
                                 const ZetaOptions& opts) {
  if (a > b) std::swap(a, b);
  return barnes_rows(s, w, a, b, std::numeric_limits<double>::infinity(), opts);
}

}  // namespace detail

ComplexVal barnes_zeta(ComplexVal s, const Rational& w, const Ellipsoid& e, const ZetaOptions& opts) {
  check_argument(s, opts, "barnes_zeta");
  if (w.sign() <= 0) throw std::invalid_argument("barnes_zeta: w must be positive");
  return detail::barnes_zeta_unchecked(s, w.to_double(), e.a().to_double(), e.b().to_double(), opts);
}

ComplexVal ech_zeta(ComplexVal s, const Ellipsoid& e, ZetaConvention conv, const ZetaOptions& opts) {
  check_argument(s, opts, "ech_zeta");
  const double a = e.a().to_double();
  const double b = e.b().to_double();
  const ComplexVal zeta = riemann_unchecked(s, opts);
  const ComplexVal axis = (std::exp(-s * std::log(a)) + std::exp(-s * std::log(b))) * zeta;

  switch (conv) {
    case ZetaConvention::Interior:
    case ZetaConvention::Full: {
      const ComplexVal barnes = detail::barnes_zeta_unchecked(s, a, a, b, opts) +
                                detail::barnes_zeta_unchecked(s, b, a, b, opts);
      return conv == ZetaConvention::Interior ? 0.5 * (barnes - axis) : 0.5 * (barnes + axis);
    }
    case ZetaConvention::Distinct: {
      // Values m*A + n*B (scaled) have a unique representative with the
      // coefficient of the larger generator below (smaller generator)/gcd.
      const auto sc = ScaledEllipsoid::of(e);
      BigInt g;
      mpz_gcd(g.get_mpz_t(), sc.A.get_mpz_t(), sc.B.get_mpz_t());
      const bool a_small = sc.A <= sc.B;
      const double inner = a_small ? a : b;
      const double outer = a_small ? b : a;
      const double rows = BigInt((a_small ? sc.A : sc.B) / g).get_d() - 1.0;
      return std::exp(-s * std::log(inner)) * zeta +
             detail::barnes_rows(s, outer, inner, outer, rows, opts);
    }
  }
  throw std::invalid_argument("ech_zeta: unknown convention");
}

DirectSum direct_zeta_sum(const Ellipsoid& e, ComplexVal s, const BigInt& j_max,
                          ZetaConvention conv, double margin) {
  const double sigma = s.real();
  if (!(sigma > 2.0 + margin) || !std::isfinite(s.imag())) {
    throw std::invalid_argument("direct_zeta_sum: requires Re(s) > 2 + margin");
  }
  if (sgn(j_max) <= 0) throw std::invalid_argument("direct_zeta_sum: j_max must be positive");

  const auto sc = ScaledEllipsoid::of(e);
  const BigInt cutoff = nth_value_scaled(sc, j_max);
  const BigInt classes = count_leq_scaled(sc, cutoff);  // includes the origin
  const auto values = spectrum_range_scaled(sc, 1, classes - 1);
  const double log_den = std::log(sc.den.get_d());

  auto term = [&](const BigInt& v) { return std::exp(-s * (std::log(v.get_d()) - log_den)); };

  std::vector<ComplexVal> terms;
  terms.reserve(values.size());
  BigInt counted = 1;  // origin
  if (conv == ZetaConvention::Distinct) {
    for (std::size_t i = 0; i < values.size(); ++i) {
      if (i > 0 && values[i] == values[i - 1]) continue;
      terms.push_back(term(values[i]));
    }
    counted += static_cast<unsigned long>(terms.size());
  } else {
    for (const auto& v : values) terms.push_back(term(v));
    counted = classes;
  }
  // Sum from the small end up.
  std::reverse(terms.begin(), terms.end());
  ComplexVal value = pairwise_sum(terms);

  std::size_t axis_terms = 0;
  if (conv == ZetaConvention::Interior) {
    std::vector<ComplexVal> axis;
    for (const BigInt* gen : {&sc.A, &sc.B}) {
      for (BigInt v = *gen; v <= cutoff; v += *gen) axis.push_back(term(v));
    }
    axis_terms = axis.size();
    std::reverse(axis.begin(), axis.end());
    value -= pairwise_sum(axis);
  }

  // sum_{v > T} v^{-sigma} = -T^{-sigma} N(T) + sigma * int_T^inf N(t) t^{-sigma-1} dt, with
  // N(t) <= (t + a + b)^2 / (2ab). Interior's omitted terms are a subset of Full's.
  const double t = sc.value(cutoff).to_double();
  const double c = (e.a() + e.b()).to_double();
  const double ab = (e.a() * e.b()).to_double();
  const double integral = sigma / (2.0 * ab) *
                          (std::pow(t, 2.0 - sigma) / (sigma - 2.0) +
                           2.0 * c * std::pow(t, 1.0 - sigma) / (sigma - 1.0) +
                           c * c * std::pow(t, -sigma) / sigma);
  const double bound = integral - std::pow(t, -sigma) * counted.get_d();

  DirectSum out;
  out.value = value;
  out.tail_bound = std::max(0.0, bound) + 1e-14 * integral;
  out.cutoff = sc.value(cutoff);
  out.terms = counted - 1 - axis_terms;
  return out;
}

}  // namespace echspec
