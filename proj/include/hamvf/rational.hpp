#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace hamvf {

/// Arbitrary precision rational number, always kept in lowest terms with a
/// positive denominator (zero is 0/1). Thin value wrapper over GMP's mpq_class.
class Rational {
 public:
  Rational() = default;
  Rational(long value) : value_(value) {}  // NOLINT(google-explicit-constructor)
  Rational(long num, long den);
  explicit Rational(mpq_class value);

  /// Parses "n", "n/d" or a plain decimal "x.y" (read exactly, "0.25" -> 1/4).
  static Rational parse(std::string_view text);

  const mpq_class& raw() const noexcept { return value_; }

  bool is_zero() const noexcept { return sgn(value_) == 0; }
  int sign() const noexcept { return sgn(value_); }
  bool is_integer() const noexcept { return value_.get_den() == 1; }

  std::string numerator_string() const { return value_.get_num().get_str(); }
  std::string denominator_string() const { return value_.get_den().get_str(); }

  /// Nearest-ish double (GMP truncates toward zero; within one ulp).
  double to_double() const;

  /// Approximate log2 of |value|; -infinity for zero. Never overflows.
  double log2_abs() const;

  /// "num" or "num/den".
  std::string to_string() const;

  Rational abs() const;
  Rational pow(unsigned exponent) const;
  Rational pow(int exponent) const;

  Rational& operator+=(const Rational& rhs);
  Rational& operator-=(const Rational& rhs);
  Rational& operator*=(const Rational& rhs);
  Rational& operator/=(const Rational& rhs);

  friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
  friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
  friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
  friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }
  Rational operator-() const;

  friend bool operator==(const Rational& lhs, const Rational& rhs) {
    return cmp(lhs.value_, rhs.value_) == 0;
  }
  friend std::strong_ordering operator<=>(const Rational& lhs, const Rational& rhs) {
    const int c = cmp(lhs.value_, rhs.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

 private:
  mpq_class value_;
};

Rational factorial(unsigned n);
Rational binomial(unsigned n, unsigned k);

std::ostream& operator<<(std::ostream& os, const Rational& value);

}  // namespace hamvf
