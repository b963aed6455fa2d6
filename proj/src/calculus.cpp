#include "hamvf/calculus.hpp"

#include <string>

#include "hamvf/error.hpp"

namespace hamvf {

namespace {

ExpPoly derivative_once(const ExpPoly& p) {
  ExpPoly out;
  for (const auto& [key, c] : p.terms()) {
    if (key.power > 0) out.accumulate(TermKey{key.power - 1, key.rate}, c * Rational(key.power));
    if (key.rate != 0) out.accumulate(key, c * Rational(key.rate));
  }
  return out;
}

// int t^k e^{rt} dt = e^{rt} sum_{i=0}^{k} (-1)^i k!/(k-i)! t^{k-i} / r^{i+1},  r != 0
void accumulate_integral(ExpPoly& out, const TermKey& key, const Rational& c) {
  if (key.rate == 0) {
    out.accumulate(TermKey{key.power + 1, 0}, c / Rational(key.power + 1));
    return;
  }
  const Rational r(key.rate);
  Rational falling(1);  // k!/(k-i)!
  for (unsigned i = 0; i <= key.power; ++i) {
    Rational term = c * falling / r.pow(i + 1);
    if (i % 2 == 1) term = -term;
    out.accumulate(TermKey{key.power - i, key.rate}, term);
    falling *= Rational(key.power - i);
  }
}

}  // namespace

ExpPoly differentiate(const ExpPoly& p, unsigned j) {
  ExpPoly out = p;
  for (unsigned i = 0; i < j && !out.is_zero(); ++i) out = derivative_once(out);
  return out;
}

ExpPoly raw_antiderivative(const ExpPoly& p) {
  ExpPoly out;
  for (const auto& [key, c] : p.terms()) accumulate_integral(out, key, c);
  return out;
}

ExpPoly antiderivative(const ExpPoly& p, const IntegralOrigin& origin) {
  ExpPoly out = raw_antiderivative(p);
  const Rational at_origin =
      eval_symbolic(out, origin.a).rational_value("antiderivative at a = " + origin.a.to_string());
  out -= ExpPoly(at_origin);
  return out;
}

ExpConstant definite_integral(const ExpPoly& p, const Rational& lo, const Rational& hi) {
  const ExpPoly primitive = raw_antiderivative(p);
  return eval_symbolic(primitive, hi) - eval_symbolic(primitive, lo);
}

ExpPoly repeated_integral(const ExpPoly& p, unsigned n, const IntegralOrigin& origin) {
  if (n == 0) throw InvalidArgument("repeated_integral requires n >= 1");
  // (t - s)^{n-1} = sum_i C(n-1, i) t^{n-1-i} (-s)^i
  ExpPoly out;
  for (unsigned i = 0; i < n; ++i) {
    Rational weight = binomial(n - 1, i);
    if (i % 2 == 1) weight = -weight;
    const ExpPoly inner = antiderivative(ExpPoly::term(1, i) * p, origin);
    out += ExpPoly::term(weight, n - 1 - i) * inner;
  }
  out *= Rational(1) / factorial(n - 1);
  return out;
}

ExpPoly iterated_antiderivative(const ExpPoly& p, unsigned n, const IntegralOrigin& origin) {
  ExpPoly out = p;
  for (unsigned i = 0; i < n; ++i) out = antiderivative(out, origin);
  return out;
}

ExpPoly j_of_d(const ExpPoly& p, unsigned n, std::span<const Rational> initial_values,
               const IntegralOrigin& origin) {
  if (initial_values.size() != n) {
    throw ArityMismatch("j_of_d: expected " + std::to_string(n) + " initial values, got " +
                        std::to_string(initial_values.size()));
  }
  ExpPoly out = p;
  for (unsigned k = 0; k < n; ++k) {
    if (initial_values[k].is_zero()) continue;
    out -= ExpPoly::shifted_power(origin.a, k) * (initial_values[k] / factorial(k));
  }
  return out;
}

std::vector<Rational> taylor_data(const ExpPoly& p, unsigned n, const IntegralOrigin& origin) {
  std::vector<Rational> values;
  values.reserve(n);
  ExpPoly derivative = p;
  for (unsigned k = 0; k < n; ++k) {
    values.push_back(eval_symbolic(derivative, origin.a)
                         .rational_value("derivative " + std::to_string(k) + " at a"));
    derivative = differentiate(derivative, 1);
  }
  return values;
}

}  // namespace hamvf
