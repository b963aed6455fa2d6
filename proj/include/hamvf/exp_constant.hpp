#pragma once

#include <map>
#include <string>

#include "hamvf/exp_poly.hpp"
#include "hamvf/rational.hpp"

namespace hamvf {

/// Exact real constant  sum_i q_i e^{c_i}  with rational q_i and rational exponents c_i.
/// Arises as the value of an exp-polynomial at a rational point, e.g. a Fredholm
/// integral over [a, b]. The exponent-0 entry is the rational part.
class ExpConstant {
 public:
  using TermMap = std::map<Rational, Rational>;

  ExpConstant() = default;
  ExpConstant(const Rational& value);  // NOLINT(google-explicit-constructor)

  const TermMap& terms() const noexcept { return terms_; }
  bool is_rational() const noexcept;
  /// Throws NonClosedConstant unless is_rational().
  Rational rational_value(const std::string& context) const;
  double to_double() const;
  std::string to_string() const;

  void accumulate(const Rational& exponent, const Rational& coeff);
  ExpConstant& operator+=(const ExpConstant& rhs);
  ExpConstant& operator-=(const ExpConstant& rhs);
  friend ExpConstant operator-(ExpConstant lhs, const ExpConstant& rhs) { return lhs -= rhs; }
  friend bool operator==(const ExpConstant&, const ExpConstant&) = default;

 private:
  TermMap terms_;
};

/// Value of p at the rational point t, keeping every e^{r t} symbolic.
ExpConstant eval_symbolic(const ExpPoly& p, const Rational& t);

}  // namespace hamvf
