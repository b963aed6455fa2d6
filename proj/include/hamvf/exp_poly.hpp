#pragma once

#include <compare>
#include <iosfwd>
#include <map>
#include <string>

#include "hamvf/rational.hpp"

namespace hamvf {

/// Identifies the basis function t^power * e^{rate t}.
struct TermKey {
  unsigned power = 0;
  long rate = 0;

  friend bool operator==(const TermKey&, const TermKey&) = default;
  /// Canonical order: rate ascending, then power ascending.
  friend std::strong_ordering operator<=>(const TermKey& lhs, const TermKey& rhs) {
    if (auto c = lhs.rate <=> rhs.rate; c != 0) return c;
    return lhs.power <=> rhs.power;
  }
};

/// Exact exp-polynomial  sum_i c_i t^{k_i} e^{r_i t}  with rational c_i and integer r_i.
///
/// The term map is canonical: no zero coefficient is ever stored and each
/// (power, rate) pair appears once, so two values are the same function exactly
/// when their term maps compare equal. The zero function is the empty map.
class ExpPoly {
 public:
  using TermMap = std::map<TermKey, Rational>;

  ExpPoly() = default;
  ExpPoly(const Rational& constant);  // NOLINT(google-explicit-constructor)
  explicit ExpPoly(TermMap terms);

  /// c * t^power * e^{rate t}
  static ExpPoly term(const Rational& coeff, unsigned power, long rate = 0);
  /// (t - a)^k expanded in the monomial basis.
  static ExpPoly shifted_power(const Rational& a, unsigned k);
  static ExpPoly t() { return term(1, 1); }
  static ExpPoly exp(long rate = 1) { return term(1, 0, rate); }

  const TermMap& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t size() const noexcept { return terms_.size(); }
  bool is_polynomial() const noexcept;
  /// Coefficient of t^power e^{rate t}, zero when absent.
  Rational coeff(unsigned power, long rate = 0) const;
  /// Largest log2|c| over all coefficients (-inf for zero).
  double max_log2_coeff() const;

  ExpPoly& operator+=(const ExpPoly& rhs);
  ExpPoly& operator-=(const ExpPoly& rhs);
  ExpPoly& operator*=(const Rational& scalar);

  friend ExpPoly operator+(ExpPoly lhs, const ExpPoly& rhs) { return lhs += rhs; }
  friend ExpPoly operator-(ExpPoly lhs, const ExpPoly& rhs) { return lhs -= rhs; }
  friend ExpPoly operator*(const ExpPoly& lhs, const ExpPoly& rhs);
  friend ExpPoly operator*(ExpPoly lhs, const Rational& scalar) { return lhs *= scalar; }
  friend ExpPoly operator*(const Rational& scalar, ExpPoly rhs) { return rhs *= scalar; }
  ExpPoly operator-() const;

  friend bool operator==(const ExpPoly&, const ExpPoly&) = default;

  /// Adds c * t^power e^{rate t} in place, keeping canonical form.
  void accumulate(const TermKey& key, const Rational& coeff);

 private:
  void assert_canonical() const;

  TermMap terms_;
};

/// Exact value at a rational point; only defined for pure polynomials.
/// Throws NotExactlyEvaluable when a nonzero exponential rate is present.
Rational eval_rational(const ExpPoly& p, const Rational& t);

/// Floating evaluation; terms are summed in ascending |coefficient| order.
double eval_float(const ExpPoly& p, double t);

/// Deterministic rendering, e.g. "e^t - 1 - t - (1/36)*t^3". Exponential terms
/// come first (rate descending), then powers ascending within a rate.
std::string pretty_print(const ExpPoly& p);

std::ostream& operator<<(std::ostream& os, const ExpPoly& p);

}  // namespace hamvf
