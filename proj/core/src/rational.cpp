#include "echspec/rational.hpp"

#include <cmath>
#include <limits>
#include <ostream>
#include <stdexcept>

namespace echspec {
namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (c < '0' || c > '9') return false;
  }
  return true;
}

}  // namespace

BigInt parse_bigint(std::string_view text) {
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }
  if (!all_digits(body)) {
    throw std::invalid_argument("not an integer: '" + std::string(text) + "'");
  }
  BigInt v(std::string(body), 10);
  return negative ? BigInt(-v) : v;
}

BigInt isqrt(const BigInt& v) {
  if (sgn(v) < 0) throw std::domain_error("isqrt of a negative number");
  BigInt r;
  mpz_sqrt(r.get_mpz_t(), v.get_mpz_t());
  return r;
}

Rational::Rational(const BigInt& num, const BigInt& den) {
  if (sgn(den) == 0) throw std::domain_error("rational with zero denominator");
  v_ = mpq_class(num, den);
  v_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) {
    return Rational(parse_bigint(text));
  }
  const auto num_text = text.substr(0, slash);
  const auto den_text = text.substr(slash + 1);
  if (!all_digits(den_text)) {
    throw std::invalid_argument("bad denominator in '" + std::string(text) + "'");
  }
  const BigInt den = parse_bigint(den_text);
  if (sgn(den) == 0) {
    throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
  }
  return Rational(parse_bigint(num_text), den);
}

double Rational::to_double() const {
  // mpq_get_d truncates toward zero; pick the nearer of it and its outward neighbour.
  const double t = v_.get_d();
  if (!std::isfinite(t)) return t;
  const double away = std::nextafter(t, sign() < 0 ? -std::numeric_limits<double>::infinity()
                                                   : std::numeric_limits<double>::infinity());
  if (!std::isfinite(away)) return t;
  const mpq_class err_t = abs(v_ - mpq_class(t));
  const mpq_class err_away = abs(v_ - mpq_class(away));
  return err_away < err_t ? away : t;
}

std::string Rational::to_string() const {
  if (is_integer()) return v_.get_num().get_str();
  return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

std::string Rational::to_fraction_string() const {
  return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

Rational Rational::operator-() const {
  Rational r;
  r.v_ = -v_;
  return r;
}

Rational& Rational::operator+=(const Rational& o) {
  v_ += o.v_;
  return *this;
}

Rational& Rational::operator-=(const Rational& o) {
  v_ -= o.v_;
  return *this;
}

Rational& Rational::operator*=(const Rational& o) {
  v_ *= o.v_;
  return *this;
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw std::domain_error("rational division by zero");
  v_ /= o.v_;
  return *this;
}

BigInt floor(const Rational& x) {
  BigInt r;
  mpz_fdiv_q(r.get_mpz_t(), x.raw().get_num_mpz_t(), x.raw().get_den_mpz_t());
  return r;
}

BigInt ceil(const Rational& x) {
  BigInt r;
  mpz_cdiv_q(r.get_mpz_t(), x.raw().get_num_mpz_t(), x.raw().get_den_mpz_t());
  return r;
}

std::ostream& operator<<(std::ostream& os, const Rational& x) { return os << x.to_string(); }

bool fits_int64(const BigInt& v) {
  static const BigInt lo(std::to_string(std::numeric_limits<std::int64_t>::min()));
  static const BigInt hi(std::to_string(std::numeric_limits<std::int64_t>::max()));
  return v >= lo && v <= hi;
}

std::int64_t to_int64(const BigInt& v) {
  if (!fits_int64(v)) throw std::overflow_error("integer does not fit in 64 bits: " + v.get_str());
  // mpz_get_si covers the full int64 range on LP64.
  return static_cast<std::int64_t>(mpz_get_si(v.get_mpz_t()));
}

}  // namespace echspec
