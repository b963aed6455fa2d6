#pragma once

#include <span>
#include <vector>

#include "hamvf/exp_constant.hpp"
#include "hamvf/exp_poly.hpp"
#include "hamvf/rational.hpp"

namespace hamvf {

/// Lower limit `a` of every J-operator; also where initial conditions are imposed.
struct IntegralOrigin {
  Rational a;
};

/// Exact j-th derivative.
ExpPoly differentiate(const ExpPoly& p, unsigned j = 1);

/// Antiderivative without integration constant (term-wise closed form).
ExpPoly raw_antiderivative(const ExpPoly& p);

/// F with F' = p and F(a) = 0. Throws NonClosedConstant when a != 0 and the
/// correction constant involves e^{r a}.
ExpPoly antiderivative(const ExpPoly& p, const IntegralOrigin& origin);

/// Exact value of the definite integral of p over [lo, hi].
ExpConstant definite_integral(const ExpPoly& p, const Rational& lo, const Rational& hi);

/// n-fold integral J^n_a p, via the single-integral Cauchy formula
///   (1/(n-1)!) * int_a^t (t - s)^{n-1} p(s) ds
/// with (t - s)^{n-1} expanded binomially. Requires n >= 1.
ExpPoly repeated_integral(const ExpPoly& p, unsigned n, const IntegralOrigin& origin);

/// J^n_a p by applying antiderivative() n times. Slower; kept as a cross-check.
ExpPoly iterated_antiderivative(const ExpPoly& p, unsigned n, const IntegralOrigin& origin);

/// J^n_a[D^n p] = p - sum_{k<n} p^{(k)}(a)/k! (t-a)^k, given the n initial values.
/// Throws ArityMismatch when initial_values.size() != n.
ExpPoly j_of_d(const ExpPoly& p, unsigned n, std::span<const Rational> initial_values,
               const IntegralOrigin& origin);

/// p(a), p'(a), ..., p^{(n-1)}(a), exactly. Throws NonClosedConstant if a value is irrational.
std::vector<Rational> taylor_data(const ExpPoly& p, unsigned n, const IntegralOrigin& origin);

}  // namespace hamvf
