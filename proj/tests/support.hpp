#pragma once

#include <cmath>
#include <functional>
#include <random>
#include <vector>

#include "hamvf/exp_poly.hpp"
#include "hamvf/homotopy.hpp"
#include "hamvf/problem.hpp"

namespace hamvf::testing {

// Random exp-polynomials: up to 5 terms, coefficients in [-10, 10] (with small
// denominators), powers <= 4, rates in {-1, 0, 1, 2}.
class ExpPolyGen {
 public:
  explicit ExpPolyGen(unsigned seed, bool polynomial_only = false)
      : rng_(seed), polynomial_only_(polynomial_only) {}

  Rational coeff() {
    std::uniform_int_distribution<long> num(-10, 10);
    std::uniform_int_distribution<long> den(1, 4);
    return Rational(num(rng_), den(rng_));
  }

  ExpPoly operator()(unsigned max_terms = 5, unsigned max_power = 4) {
    std::uniform_int_distribution<unsigned> count(0, max_terms);
    std::uniform_int_distribution<unsigned> power(0, max_power);
    std::uniform_int_distribution<int> rate_index(0, 3);
    static constexpr long kRates[] = {-1, 0, 1, 2};
    ExpPoly p;
    const unsigned n = count(rng_);
    for (unsigned i = 0; i < n; ++i) {
      const long rate = polynomial_only_ ? 0 : kRates[rate_index(rng_)];
      p += ExpPoly::term(coeff(), power(rng_), rate);
    }
    return p;
  }

  std::mt19937& engine() { return rng_; }

 private:
  std::mt19937 rng_;
  bool polynomial_only_;
};

// Adaptive Simpson quadrature on [lo, hi].
inline double simpson(const std::function<double(double)>& f, double lo, double hi, double tol = 1e-13) {
  std::function<double(double, double, double, double, double, double, int)> rec =
      [&](double a, double b, double fa, double fm, double fb, double whole, int depth) {
        const double m = 0.5 * (a + b);
        const double lm = 0.5 * (a + m);
        const double rm = 0.5 * (m + b);
        const double flm = f(lm);
        const double frm = f(rm);
        const double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
        const double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
        if (depth <= 0 || std::fabs(left + right - whole) <= 15.0 * tol) {
          return left + right + (left + right - whole) / 15.0;
        }
        return rec(a, m, fa, flm, fm, left, depth - 1) + rec(m, b, fm, frm, fb, right, depth - 1);
      };
  const double fa = f(lo);
  const double fb = f(hi);
  const double fm = f(0.5 * (lo + hi));
  return rec(lo, hi, fa, fm, fb, (hi - lo) / 6.0 * (fa + 4.0 * fm + fb), 40);
}

inline double rel_diff(double x, double y) {
  const double scale = std::max({1.0, std::fabs(x), std::fabs(y)});
  return std::fabs(x - y) / scale;
}

// y'' = e^t - t + int_0^1 t s y(s) ds, y(0) = y'(0) = 1.
inline VfideProblem example1(std::vector<ExpPoly> split = {ExpPoly::exp(), -ExpPoly::t()}) {
  VfideProblem p;
  p.order = 2;
  p.a_coeffs = {ExpPoly{}};
  p.split = std::move(split);
  p.lambda2 = 1;
  p.kernel2.parts.push_back({ExpPoly::t(), ExpPoly::t()});
  p.f2 = PowerNonlinearity::identity();
  p.a = 0;
  p.b = 1;
  p.alphas = {1, 1};
  return p;
}

// u' = -1 + int_0^t u(s)^2 ds, u(0) = 0.
inline VfideProblem example2() {
  VfideProblem p;
  p.order = 1;
  p.split = {ExpPoly(-1), ExpPoly{}};
  p.lambda1 = 1;
  p.kernel1.parts.push_back({ExpPoly(1), ExpPoly(1)});
  p.f1 = PowerNonlinearity::power(2);
  p.a = 0;
  p.b = 1;
  p.alphas = {0};
  return p;
}

inline MethodConfig method(Variant v, Rational hbar, unsigned iterations, unsigned n = 1) {
  MethodConfig c;
  c.variant = v;
  c.hbar = hbar;
  c.iterations = iterations;
  c.qham_n = n;
  return c;
}

inline ExpPoly one_plus_t() { return ExpPoly(1) + ExpPoly::t(); }

// Lagrange interpolation of values y_i at nodes x_i, evaluated at x.
inline ExpPoly lagrange(const std::vector<Rational>& xs, const std::vector<ExpPoly>& ys, const Rational& x) {
  ExpPoly out;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    Rational basis(1);
    for (std::size_t j = 0; j < xs.size(); ++j) {
      if (j != i) basis *= (x - xs[j]) / (xs[i] - xs[j]);
    }
    out += basis * ys[i];
  }
  return out;
}

// Small random problems with polynomial data so every constant stays rational.
inline VfideProblem random_problem(ExpPolyGen& gen) {
  std::uniform_int_distribution<unsigned> order(1, 2);
  std::uniform_int_distribution<int> coin(0, 1);
  VfideProblem p;
  p.order = order(gen.engine());
  p.a_coeffs.assign(p.order - 1, ExpPoly{});
  if (p.order == 2 && coin(gen.engine())) p.a_coeffs[0] = ExpPoly(gen.coeff());
  p.split = {gen(2, 2), gen(2, 2)};
  p.lambda1 = gen.coeff();
  p.lambda2 = gen.coeff();
  p.kernel1.parts.push_back({gen(1, 1), gen(1, 1)});
  p.kernel2.parts.push_back({gen(1, 1), gen(1, 1)});
  p.f1 = coin(gen.engine()) ? PowerNonlinearity::power(2) : PowerNonlinearity::identity();
  p.f2 = PowerNonlinearity::identity();
  p.a = 0;
  p.b = 1;
  for (unsigned k = 0; k < p.order; ++k) p.alphas.push_back(gen.coeff());
  return p;
}

}  // namespace hamvf::testing
