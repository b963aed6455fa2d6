#include "hamvf/exp_poly.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <limits>
#include <ostream>
#include <vector>

#include "hamvf/error.hpp"

namespace hamvf {

ExpPoly::ExpPoly(const Rational& constant) {
  if (!constant.is_zero()) terms_.emplace(TermKey{0, 0}, constant);
}

ExpPoly::ExpPoly(TermMap terms) : terms_(std::move(terms)) {
  std::erase_if(terms_, [](const auto& kv) { return kv.second.is_zero(); });
  assert_canonical();
}

ExpPoly ExpPoly::term(const Rational& coeff, unsigned power, long rate) {
  ExpPoly out;
  out.accumulate(TermKey{power, rate}, coeff);
  return out;
}

ExpPoly ExpPoly::shifted_power(const Rational& a, unsigned k) {
  ExpPoly out;
  const Rational minus_a = -a;
  for (unsigned i = 0; i <= k; ++i) {
    out.accumulate(TermKey{i, 0}, binomial(k, i) * minus_a.pow(k - i));
  }
  return out;
}

bool ExpPoly::is_polynomial() const noexcept {
  return std::all_of(terms_.begin(), terms_.end(), [](const auto& kv) { return kv.first.rate == 0; });
}

Rational ExpPoly::coeff(unsigned power, long rate) const {
  auto it = terms_.find(TermKey{power, rate});
  return it == terms_.end() ? Rational{} : it->second;
}

double ExpPoly::max_log2_coeff() const {
  double best = -std::numeric_limits<double>::infinity();
  for (const auto& [key, c] : terms_) best = std::max(best, c.log2_abs());
  return best;
}

void ExpPoly::accumulate(const TermKey& key, const Rational& coeff) {
  if (coeff.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(key, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

ExpPoly& ExpPoly::operator+=(const ExpPoly& rhs) {
  for (const auto& [key, c] : rhs.terms_) accumulate(key, c);
  assert_canonical();
  return *this;
}

ExpPoly& ExpPoly::operator-=(const ExpPoly& rhs) {
  for (const auto& [key, c] : rhs.terms_) accumulate(key, -c);
  assert_canonical();
  return *this;
}

ExpPoly& ExpPoly::operator*=(const Rational& scalar) {
  if (scalar.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [key, c] : terms_) c *= scalar;
  return *this;
}

ExpPoly operator*(const ExpPoly& lhs, const ExpPoly& rhs) {
  ExpPoly out;
  for (const auto& [lk, lc] : lhs.terms_) {
    for (const auto& [rk, rc] : rhs.terms_) {
      out.accumulate(TermKey{lk.power + rk.power, lk.rate + rk.rate}, lc * rc);
    }
  }
  out.assert_canonical();
  return out;
}

ExpPoly ExpPoly::operator-() const {
  ExpPoly out = *this;
  for (auto& [key, c] : out.terms_) c = -c;
  return out;
}

void ExpPoly::assert_canonical() const {
#ifndef NDEBUG
  for (const auto& [key, c] : terms_) assert(!c.is_zero());
#endif
}

Rational eval_rational(const ExpPoly& p, const Rational& t) {
  Rational sum;
  for (const auto& [key, c] : p.terms()) {
    if (key.rate != 0) {
      throw NotExactlyEvaluable("exponential factor e^(" + std::to_string(key.rate) +
                                "*t) has no exact rational value");
    }
    sum += c * t.pow(key.power);
  }
  return sum;
}

double eval_float(const ExpPoly& p, double t) {
  std::vector<std::pair<const Rational*, const TermKey*>> order;
  order.reserve(p.size());
  for (const auto& [key, c] : p.terms()) order.emplace_back(&c, &key);
  std::stable_sort(order.begin(), order.end(),
                   [](const auto& x, const auto& y) { return x.first->abs() < y.first->abs(); });
  double sum = 0.0;
  for (const auto& [c, key] : order) {
    double v = c->to_double() * std::pow(t, static_cast<double>(key->power));
    if (key->rate != 0) v *= std::exp(static_cast<double>(key->rate) * t);
    sum += v;
  }
  return sum;
}

namespace {

std::string factor_text(const TermKey& key) {
  std::string out;
  if (key.power == 1) {
    out = "t";
  } else if (key.power > 1) {
    out = "t^" + std::to_string(key.power);
  }
  if (key.rate != 0) {
    if (!out.empty()) out += "*";
    if (key.rate == 1) {
      out += "e^t";
    } else if (key.rate == -1) {
      out += "e^(-t)";
    } else {
      out += "e^(" + std::to_string(key.rate) + "*t)";
    }
  }
  return out;
}

}  // namespace

std::string pretty_print(const ExpPoly& p) {
  if (p.is_zero()) return "0";

  std::vector<std::pair<TermKey, Rational>> ordered(p.terms().begin(), p.terms().end());
  std::stable_sort(ordered.begin(), ordered.end(), [](const auto& x, const auto& y) {
    if (x.first.rate != y.first.rate) return x.first.rate > y.first.rate;
    return x.first.power < y.first.power;
  });

  std::string out;
  bool first = true;
  for (const auto& [key, c] : ordered) {
    const bool negative = c.sign() < 0;
    if (first) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;

    const Rational magnitude = c.abs();
    const std::string factors = factor_text(key);
    if (factors.empty()) {
      out += magnitude.to_string();
    } else if (magnitude == Rational(1)) {
      out += factors;
    } else if (magnitude.is_integer()) {
      out += magnitude.to_string() + "*" + factors;
    } else {
      out += "(" + magnitude.to_string() + ")*" + factors;
    }
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const ExpPoly& p) { return os << pretty_print(p); }

}  // namespace hamvf
