#include "hamvf/rational.hpp"

#include <cctype>
#include <cmath>
#include <limits>
#include <ostream>

#include "hamvf/error.hpp"

namespace hamvf {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

mpz_class parse_integer(std::string_view s) {
  return mpz_class(std::string(s), 10);
}

}  // namespace

Rational::Rational(long num, long den) {
  if (den == 0) throw InvalidArgument("rational with zero denominator");
  value_ = mpq_class(num, 1);
  value_ /= den;
  value_.canonicalize();
}

Rational::Rational(mpq_class value) : value_(std::move(value)) { value_.canonicalize(); }

Rational Rational::parse(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  if (text.empty()) throw InvalidArgument("empty number");

  bool negative = false;
  std::string_view body = text;
  if (body.front() == '+' || body.front() == '-') {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }

  mpq_class result;
  if (auto slash = body.find('/'); slash != std::string_view::npos) {
    const auto num = body.substr(0, slash);
    const auto den = body.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den)) {
      throw InvalidArgument("malformed rational '" + std::string(text) + "'");
    }
    mpz_class d = parse_integer(den);
    if (d == 0) throw InvalidArgument("zero denominator in '" + std::string(text) + "'");
    result = mpq_class(parse_integer(num), d);
  } else if (auto dot = body.find('.'); dot != std::string_view::npos) {
    const auto whole = body.substr(0, dot);
    const auto frac = body.substr(dot + 1);
    if ((whole.empty() && frac.empty()) || (!whole.empty() && !all_digits(whole)) ||
        (!frac.empty() && !all_digits(frac))) {
      throw InvalidArgument("malformed decimal '" + std::string(text) + "'");
    }
    mpz_class scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, frac.size());
    mpz_class digits = parse_integer(std::string(whole.empty() ? "0" : whole) + std::string(frac));
    result = mpq_class(digits, scale);
  } else {
    if (!all_digits(body)) throw InvalidArgument("malformed number '" + std::string(text) + "'");
    result = mpq_class(parse_integer(body));
  }
  result.canonicalize();
  if (negative) result = -result;
  return Rational(std::move(result));
}

double Rational::to_double() const { return value_.get_d(); }

double Rational::log2_abs() const {
  if (is_zero()) return -std::numeric_limits<double>::infinity();
  long num_exp = 0;
  long den_exp = 0;
  const double num_mant = mpz_get_d_2exp(&num_exp, value_.get_num_mpz_t());
  const double den_mant = mpz_get_d_2exp(&den_exp, value_.get_den_mpz_t());
  return std::log2(std::fabs(num_mant)) - std::log2(den_mant) + static_cast<double>(num_exp - den_exp);
}

std::string Rational::to_string() const {
  if (is_integer()) return numerator_string();
  return numerator_string() + "/" + denominator_string();
}

Rational Rational::abs() const { return Rational(mpq_class(::abs(value_))); }

Rational Rational::pow(unsigned exponent) const {
  mpz_class num;
  mpz_class den;
  mpz_pow_ui(num.get_mpz_t(), value_.get_num_mpz_t(), exponent);
  mpz_pow_ui(den.get_mpz_t(), value_.get_den_mpz_t(), exponent);
  return Rational(mpq_class(num, den));
}

Rational Rational::pow(int exponent) const {
  if (exponent >= 0) return pow(static_cast<unsigned>(exponent));
  if (is_zero()) throw InvalidArgument("zero raised to a negative power");
  return Rational(1) / pow(static_cast<unsigned>(-exponent));
}

Rational& Rational::operator+=(const Rational& rhs) {
  value_ += rhs.value_;
  return *this;
}

Rational& Rational::operator-=(const Rational& rhs) {
  value_ -= rhs.value_;
  return *this;
}

Rational& Rational::operator*=(const Rational& rhs) {
  value_ *= rhs.value_;
  return *this;
}

Rational& Rational::operator/=(const Rational& rhs) {
  if (rhs.is_zero()) throw InvalidArgument("division by zero");
  value_ /= rhs.value_;
  return *this;
}

Rational Rational::operator-() const { return Rational(mpq_class(-value_)); }

Rational factorial(unsigned n) {
  mpz_class out;
  mpz_fac_ui(out.get_mpz_t(), n);
  return Rational(mpq_class(out));
}

Rational binomial(unsigned n, unsigned k) {
  mpz_class out;
  mpz_bin_uiui(out.get_mpz_t(), n, k);
  return Rational(mpq_class(out));
}

std::ostream& operator<<(std::ostream& os, const Rational& value) { return os << value.to_string(); }

}  // namespace hamvf
