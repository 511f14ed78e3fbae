#include "oracles.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <stdexcept>
#include <string>

#include <boost/math/special_functions/polygamma.hpp>

namespace oracle {

Rat rat(const std::string& text) {
  const auto slash = text.find('/');
  if (slash == std::string::npos) return Rat(Int(text));
  return Rat(Int(text.substr(0, slash)), Int(text.substr(slash + 1)));
}

Int floor_sum(std::int64_t n, std::int64_t p, std::int64_t q, std::int64_t m) {
  Int total = 0;
  for (std::int64_t i = 0; i < n; ++i) total += (Int(p) * i + q) / m;  // nonnegative: truncation = floor
  return total;
}

namespace {

Int floor_rat(const Rat& x) {
  Int q = boost::multiprecision::numerator(x) / boost::multiprecision::denominator(x);
  if (x < 0 && Rat(q) != x) q -= 1;
  return q;
}

}  // namespace

Int count_leq(const Rat& a, const Rat& b, const Rat& t) {
  if (t < 0) return 0;
  Int total = 0;
  for (Int m = 0; Rat(m) * a <= t; ++m) total += floor_rat((t - Rat(m) * a) / b) + 1;
  return total;
}

std::int64_t distinct_leq(const Rat& a, const Rat& b, const Rat& t) {
  std::set<Rat> values;
  for (Int m = 0; Rat(m) * a <= t; ++m) {
    for (Int n = 0; Rat(m) * a + Rat(n) * b <= t; ++n) values.insert(Rat(m) * a + Rat(n) * b);
  }
  return static_cast<std::int64_t>(values.size());
}

std::vector<Rat> sorted_spectrum(const Rat& a, const Rat& b, std::size_t count) {
  Rat cutoff = std::max(a, b);
  while (count_leq(a, b, cutoff) < count) cutoff *= 2;
  std::vector<Rat> values;
  for (Int m = 0; Rat(m) * a <= cutoff; ++m) {
    for (Int n = 0; Rat(m) * a + Rat(n) * b <= cutoff; ++n) values.push_back(Rat(m) * a + Rat(n) * b);
  }
  std::sort(values.begin(), values.end());
  values.resize(count);
  return values;
}

std::vector<Rat> bernoulli_numbers(int n) {
  // Akiyama-Tanigawa yields B_k with B_1 = +1/2.
  std::vector<Rat> out(n + 1);
  std::vector<Rat> row(n + 1);
  for (int m = 0; m <= n; ++m) {
    row[m] = Rat(1, m + 1);
    for (int j = m; j >= 1; --j) row[j - 1] = Rat(j) * (row[j - 1] - row[j]);
    out[m] = row[0];
  }
  if (n >= 1) out[1] = -out[1];
  return out;
}

Float50 euler_gamma() {
  const int n = 100000;
  Float50 h = 0;
  for (int k = n; k >= 1; --k) h += Float50(1) / k;
  const Float50 nn = n;
  return h - log(nn) - 1 / (2 * nn) + 1 / (12 * nn * nn) - 1 / (120 * nn * nn * nn * nn);
}

DoubleSum barnes_direct(std::complex<double> s, double w, double a, double b, double cutoff) {
  using CL = std::complex<long double>;
  const CL sl(s.real(), s.imag());
  const long double sigma = s.real();
  if (sigma <= 2.0L) throw std::invalid_argument("barnes_direct needs Re(s) > 2");
  // Sum from the largest values down to limit cancellation of small terms.
  std::vector<long double> values;
  for (long m = 0; w + m * a <= cutoff; ++m) {
    for (long n = 0; w + m * a + n * b <= cutoff; ++n) {
      values.push_back(static_cast<long double>(w) + static_cast<long double>(m) * a +
                       static_cast<long double>(n) * b);
    }
  }
  std::sort(values.begin(), values.end(), std::greater<>());
  CL total = 0;
  for (const long double v : values) total += std::exp(-sl * std::log(v));

  // Shell (T 2^i, T 2^{i+1}] holds at most (T 2^{i+1} - w + a + b)^2 / (2ab) points,
  // each of modulus at most (T 2^i)^{-sigma}.
  long double tail = 0;
  for (int i = 0; i < 400; ++i) {
    const long double lo = std::ldexp(static_cast<long double>(cutoff), i);
    const long double hi = 2 * lo;
    const long double pts = (hi - w + a + b) * (hi - w + a + b) / (2.0L * a * b);
    const long double term = pts * std::pow(lo, -sigma);
    tail += term;
    if (term < 1e-40L * tail) break;
  }
  return {total, tail};
}

RowSum barnes_polygamma(int s, double w, double a, double b, long rows) {
  if (s < 3) throw std::invalid_argument("barnes_polygamma needs s >= 3");
  // sum_{m>=0} (x+m)^{-s} = (-1)^s psi^{(s-1)}(x) / (s-1)!.
  const long double fact = std::tgamma(static_cast<long double>(s));
  const long double sign = (s % 2 == 0) ? 1.0L : -1.0L;
  const long double a_pow = std::pow(static_cast<long double>(a), -static_cast<long double>(s));
  long double total = 0;
  for (long n = rows - 1; n >= 0; --n) {
    const long double x = (static_cast<long double>(w) + static_cast<long double>(n) * b) / a;
    total += a_pow * sign * boost::math::polygamma(s - 1, x) / fact;
  }
  // zeta(s, x) <= x^{-s} + x^{1-s}/(s-1); integrate the decreasing bound from n = rows - 1.
  const long double x0 = (static_cast<long double>(w) + static_cast<long double>(rows - 1) * b) / a;
  const long double sl = s;
  const long double tail = a_pow * (a / static_cast<long double>(b)) *
                           (std::pow(x0, 1 - sl) / (sl - 1) + std::pow(x0, 2 - sl) / ((sl - 1) * (sl - 2)));
  return {total, tail};
}

double sup_by_scan(const std::function<bool(double)>& pred, double lo, double hi, int per_octave) {
  const double step = std::exp2(1.0 / per_octave);
  double last = std::nan("");
  double r = lo;
  for (; r <= hi; r *= step) {
    if (pred(r)) last = r;
  }
  if (std::isnan(last)) return lo;
  double a = last;
  double b = last * step;
  for (int i = 0; i < 300 && b - a > 1e-15 * b; ++i) {
    const double mid = 0.5 * (a + b);
    (pred(mid) ? a : b) = mid;
  }
  return a;
}

}  // namespace oracle
