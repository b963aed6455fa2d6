#pragma once

#include <span>
#include <utility>
#include <vector>

#include "hamvf/calculus.hpp"
#include "hamvf/exp_poly.hpp"
#include "hamvf/rational.hpp"

namespace hamvf {

/// One factor pair of a separable kernel: K(t, s) += g(t) h(s).
struct KernelPart {
  ExpPoly g;
  ExpPoly h;

  friend bool operator==(const KernelPart&, const KernelPart&) = default;
};

/// K(t, s) = sum_i g_i(t) h_i(s); the zero kernel has no parts.
struct SeparableKernel {
  std::vector<KernelPart> parts;

  bool is_zero() const noexcept { return parts.empty(); }
  friend bool operator==(const SeparableKernel&, const SeparableKernel&) = default;
};

struct PowerTerm {
  Rational coeff;
  unsigned degree = 0;

  friend bool operator==(const PowerTerm&, const PowerTerm&) = default;
};

/// F(u) = sum coeff * u^degree, degrees strictly increasing, coefficients nonzero.
class PowerNonlinearity {
 public:
  PowerNonlinearity() = default;
  /// Throws InvalidArgument if degrees are not strictly increasing or a coefficient is zero.
  explicit PowerNonlinearity(std::vector<PowerTerm> monomials);

  static PowerNonlinearity identity() { return PowerNonlinearity({{Rational(1), 1}}); }
  static PowerNonlinearity power(unsigned degree) { return PowerNonlinearity({{Rational(1), degree}}); }

  const std::vector<PowerTerm>& monomials() const noexcept { return monomials_; }
  bool is_zero() const noexcept { return monomials_.empty(); }
  unsigned max_degree() const noexcept { return monomials_.empty() ? 0 : monomials_.back().degree; }

  friend bool operator==(const PowerNonlinearity&, const PowerNonlinearity&) = default;

 private:
  std::vector<PowerTerm> monomials_;
};

/// Order-p Volterra-Fredholm integro-differential equation with initial data:
///
///   u^{(p)} + sum_{j=1}^{p-1} a_j u^{(j)} = f + lambda1 int_a^t K1 F1(u) ds
///                                             + lambda2 int_a^b K2 F2(u) ds,
///   u^{(k)}(a) = alpha_k,  k < p,
///
/// where f = x_0 + ... + x_n is given through its split.
struct VfideProblem {
  unsigned order = 1;
  std::vector<ExpPoly> a_coeffs;  // a_1 ... a_{p-1}
  std::vector<ExpPoly> split;     // x_0 ... x_n
  Rational lambda1;
  Rational lambda2;
  SeparableKernel kernel1;
  SeparableKernel kernel2;
  PowerNonlinearity f1;
  PowerNonlinearity f2;
  Rational a;
  Rational b{1};
  std::vector<Rational> alphas;  // alpha_0 ... alpha_{p-1}

  /// Throws InvalidArgument when an invariant is violated.
  void validate() const;
  IntegralOrigin origin() const { return IntegralOrigin{a}; }
  /// f = sum of the split.
  ExpPoly rhs() const;
  /// x_k, or zero past the end of the split.
  ExpPoly split_part(std::size_t k) const;

  friend bool operator==(const VfideProblem&, const VfideProblem&) = default;
};

/// u_0 = sum_k alpha_k/k! (t-a)^k + J^p_a(x_0).
ExpPoly initial_guess(const VfideProblem& prob);

/// sum_i g_i(t) * int_a^t h_i(s) integrand(s) ds.
ExpPoly apply_volterra(const SeparableKernel& kernel, const ExpPoly& integrand,
                       const IntegralOrigin& origin);

/// sum_i g_i(t) * int_a^b h_i(s) integrand(s) ds. Throws NonClosedConstant when a
/// definite integral is not rational.
ExpPoly apply_fredholm(const SeparableKernel& kernel, const ExpPoly& integrand,
                       const std::pair<Rational, Rational>& domain);

/// Coefficient of q^m in F(sum_i u_i q^i). Needs iterates.size() > m.
ExpPoly apply_nonlinearity_coeff(const PowerNonlinearity& f, std::span<const ExpPoly> iterates,
                                 unsigned m);

/// Coefficient of q^m in N[phi(t; q)] where phi = sum_i u_i q^i and
///   N[u] = D^p u + sum_j a_j D^j u - lambda1 int_a^t K1 F1(u) - lambda2 int_a^b K2 F2(u).
ExpPoly apply_n_coeff(const VfideProblem& prob, std::span<const ExpPoly> iterates, unsigned m);

}  // namespace hamvf
