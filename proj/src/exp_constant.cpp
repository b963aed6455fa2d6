#include "hamvf/exp_constant.hpp"

#include <cmath>

#include "hamvf/error.hpp"

namespace hamvf {

ExpConstant::ExpConstant(const Rational& value) { accumulate(Rational{}, value); }

bool ExpConstant::is_rational() const noexcept {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_zero());
}

Rational ExpConstant::rational_value(const std::string& context) const {
  if (!is_rational()) {
    throw NonClosedConstant(context + ": constant " + to_string() + " is not rational", to_string());
  }
  return terms_.empty() ? Rational{} : terms_.begin()->second;
}

double ExpConstant::to_double() const {
  double sum = 0.0;
  for (const auto& [exponent, coeff] : terms_) sum += coeff.to_double() * std::exp(exponent.to_double());
  return sum;
}

std::string ExpConstant::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [exponent, coeff] : terms_) {
    const bool negative = coeff.sign() < 0;
    if (first) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    const Rational magnitude = coeff.abs();
    if (exponent.is_zero()) {
      out += magnitude.to_string();
      continue;
    }
    if (magnitude != Rational(1)) out += "(" + magnitude.to_string() + ")*";
    out += "e^(" + exponent.to_string() + ")";
  }
  return out;
}

void ExpConstant::accumulate(const Rational& exponent, const Rational& coeff) {
  if (coeff.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(exponent, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

ExpConstant& ExpConstant::operator+=(const ExpConstant& rhs) {
  for (const auto& [e, c] : rhs.terms_) accumulate(e, c);
  return *this;
}

ExpConstant& ExpConstant::operator-=(const ExpConstant& rhs) {
  for (const auto& [e, c] : rhs.terms_) accumulate(e, -c);
  return *this;
}

ExpConstant eval_symbolic(const ExpPoly& p, const Rational& t) {
  ExpConstant out;
  for (const auto& [key, c] : p.terms()) {
    out.accumulate(Rational(key.rate) * t, c * t.pow(key.power));
  }
  return out;
}

}  // namespace hamvf
