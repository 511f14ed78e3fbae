#include "echspec/asymptotics.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <stdexcept>

#include "echspec/errors.hpp"

namespace echspec {
namespace {

constexpr int kSqrtFractionBits = 64;
constexpr double kUnitRoundoff = 0x1p-53;

// Least squares on N columns by modified Gram-Schmidt; returns the coefficients.
template <std::size_t N>
std::array<double, N> least_squares(std::array<std::vector<double>, N> cols, std::vector<double> y) {
  const std::size_t rows = y.size();
  std::array<std::array<double, N>, N> r{};
  for (std::size_t c = 0; c < N; ++c) {
    for (std::size_t p = 0; p < c; ++p) {
      double dot = 0.0;
      for (std::size_t i = 0; i < rows; ++i) dot += cols[p][i] * cols[c][i];
      r[p][c] = dot;
      for (std::size_t i = 0; i < rows; ++i) cols[c][i] -= dot * cols[p][i];
    }
    double norm = 0.0;
    for (std::size_t i = 0; i < rows; ++i) norm += cols[c][i] * cols[c][i];
    norm = std::sqrt(norm);
    if (norm == 0.0) throw std::invalid_argument("least squares: rank-deficient design");
    r[c][c] = norm;
    for (std::size_t i = 0; i < rows; ++i) cols[c][i] /= norm;
  }
  std::array<double, N> qty{};
  for (std::size_t c = 0; c < N; ++c) {
    double dot = 0.0;
    for (std::size_t i = 0; i < rows; ++i) dot += cols[c][i] * y[i];
    qty[c] = dot;
  }
  std::array<double, N> x{};
  for (std::size_t c = N; c-- > 0;) {
    double v = qty[c];
    for (std::size_t p = c + 1; p < N; ++p) v -= r[c][p] * x[p];
    x[c] = v / r[c][c];
  }
  return x;
}

struct LineFit {
  double slope;
  double intercept;
  double rms;
};

LineFit fit_line(const std::vector<double>& x, const std::vector<double>& y) {
  const auto coef = least_squares<2>({x, std::vector<double>(x.size(), 1.0)}, y);
  double ss = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double e = y[i] - (coef[0] * x[i] + coef[1]);
    ss += e * e;
  }
  return {coef[0], coef[1], std::sqrt(ss / static_cast<double>(x.size()))};
}

}  // namespace

Rational contact_volume(const Ellipsoid& e) { return e.a() * e.b(); }

namespace {

// vol * 2j = 2ABj / den^2, so d = (V - sqrt(2ABj)) / den with V the scaled capacity.
std::vector<DkPoint> defects(const ScaledEllipsoid& s, const BigInt& j0, std::span<const BigInt> values) {
  const BigInt two_ab = 2 * s.A * s.B;
  const BigInt scale_den = s.den << kSqrtFractionBits;
  std::vector<DkPoint> out;
  out.reserve(values.size());
  BigInt j = j0;
  for (const auto& v : values) {
    const BigInt root = isqrt(BigInt(two_ab * j) << (2 * kSqrtFractionBits));
    const BigInt diff = (v << kSqrtFractionBits) - root;
    const double d = Rational(diff, scale_den).to_double();
    const double d_err = 2.0 * kUnitRoundoff * std::abs(d) + std::ldexp(1.0, -kSqrtFractionBits);
    out.push_back({j, s.value(v), d, d_err});
    ++j;
  }
  return out;
}

}  // namespace

std::vector<DkPoint> d_sequence(const Ellipsoid& e, const BigInt& j0, const BigInt& j1) {
  if (sgn(j0) < 0) throw std::invalid_argument("d_sequence: j0 must be nonnegative");
  if (j0 > j1) throw std::invalid_argument("d_sequence: j0 > j1");
  const auto s = ScaledEllipsoid::of(e);
  const auto values = spectrum_range_scaled(s, j0, j1);
  return defects(s, j0, values);
}

std::vector<DkPoint> d_sequence(const Ellipsoid& e, const BigInt& j0, std::span<const Rational> capacities) {
  if (sgn(j0) < 0) throw std::invalid_argument("d_sequence: j0 must be nonnegative");
  const auto s = ScaledEllipsoid::of(e);
  std::vector<BigInt> values;
  values.reserve(capacities.size());
  for (const auto& c : capacities) {
    const Rational scaled = c * Rational(s.den);
    if (!scaled.is_integer()) throw std::invalid_argument("d_sequence: capacity is not a lattice value");
    values.push_back(scaled.numerator());
  }
  return defects(s, j0, values);
}

WeylSample weyl_count(const Ellipsoid& e, const Rational& R) {
  if (R.sign() < 0) throw std::invalid_argument("weyl_count: R must be nonnegative");
  return {R, count_leq(e, R), distinct_values_leq(e, R)};
}

FitResult weyl_fit(const Ellipsoid& e, std::span<const Rational> radii) {
  if (radii.size() < 3) throw std::invalid_argument("weyl_fit: need at least 3 samples");
  for (std::size_t i = 1; i < radii.size(); ++i) {
    if (!(radii[i - 1] < radii[i])) throw std::invalid_argument("weyl_fit: R must increase");
  }
  if (radii.front().sign() < 0) throw std::invalid_argument("weyl_fit: R must be nonnegative");

  const std::size_t n = radii.size();
  const double r_max = radii.back().to_double();
  std::vector<double> r(n), counts(n), x2(n), x1(n);
  for (std::size_t i = 0; i < n; ++i) {
    r[i] = radii[i].to_double();
    counts[i] = count_leq(e, radii[i]).get_d();
    x1[i] = r[i] / r_max;
    x2[i] = x1[i] * x1[i];
  }
  const auto coef = least_squares<3>({x2, x1, std::vector<double>(n, 1.0)}, counts);
  const double c2 = coef[0] / (r_max * r_max);
  const double c1 = coef[1] / r_max;

  double ss = 0.0;
  std::vector<double> log_r, log_rem;
  for (std::size_t i = 0; i < n; ++i) {
    const double lead = c2 * r[i] * r[i];
    const double fit = lead + c1 * r[i] + coef[2];
    ss += (counts[i] - fit) * (counts[i] - fit);
    const double remainder = counts[i] - lead;
    const double rounding = 10.0 * 2.0 * kUnitRoundoff * (std::abs(counts[i]) + std::abs(lead));
    if (r[i] > 0.0 && std::abs(remainder) > rounding) {
      log_r.push_back(std::log(r[i]));
      log_rem.push_back(std::log(std::abs(remainder)));
    }
  }
  if (log_r.size() < 2) {
    throw NonConvergent("weyl_fit: remainder is below rounding level at almost every sample");
  }
  const auto line = fit_line(log_r, log_rem);

  FitResult out;
  out.coefficient = c2;
  out.exponent = line.slope;
  out.residual = std::sqrt(ss / static_cast<double>(n));
  out.window = {0, static_cast<std::int64_t>(n - 1)};
  return out;
}

std::vector<WindowSup> window_sups(std::span<const DkPoint> points) {
  std::vector<WindowSup> out;
  for (const auto& p : points) {
    if (sgn(p.j) <= 0) continue;
    const std::int64_t j = to_int64(p.j);
    const int w = static_cast<int>(mpz_sizeinbase(p.j.get_mpz_t(), 2)) - 1;
    if (out.empty() || out.back().w != w) out.push_back({w, j, std::abs(p.d)});
    auto& cur = out.back();
    if (std::abs(p.d) > cur.sup_abs_d) {
      cur.sup_abs_d = std::abs(p.d);
      cur.j_at_max = j;
    }
  }
  return out;
}

FitResult exponent_fit(std::span<const DkPoint> points, int window_count) {
  if (points.empty()) throw std::invalid_argument("exponent_fit: no points");
  if (window_count < 1) throw std::invalid_argument("exponent_fit: window_count must be positive");
  for (std::size_t i = 1; i < points.size(); ++i) {
    if (!(points[i - 1].j < points[i].j)) {
      throw std::invalid_argument("exponent_fit: j must be strictly increasing");
    }
  }
  auto windows = window_sups(points);
  std::erase_if(windows, [](const WindowSup& w) { return w.sup_abs_d <= 0.0; });
  if (windows.size() > static_cast<std::size_t>(window_count)) {
    windows.erase(windows.begin(), windows.end() - window_count);
  }
  if (windows.size() < 2) throw std::invalid_argument("exponent_fit: need at least two windows");

  std::vector<double> lx, ly;
  for (const auto& w : windows) {
    lx.push_back(std::log(static_cast<double>(w.j_at_max)));
    ly.push_back(std::log(w.sup_abs_d));
  }
  const auto line = fit_line(lx, ly);
  FitResult out;
  out.coefficient = std::exp(line.intercept);
  out.exponent = line.slope;
  out.residual = line.rms;
  const std::int64_t last_j = to_int64(points.back().j);
  out.window = {std::int64_t{1} << windows.front().w,
                std::min(last_j, (std::int64_t{1} << (windows.back().w + 1)) - 1)};
  return out;
}

}  // namespace echspec
