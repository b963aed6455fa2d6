#include "hamvf/problem.hpp"

#include <string>

#include "hamvf/error.hpp"

namespace hamvf {

PowerNonlinearity::PowerNonlinearity(std::vector<PowerTerm> monomials) : monomials_(std::move(monomials)) {
  for (std::size_t i = 0; i < monomials_.size(); ++i) {
    if (monomials_[i].coeff.is_zero()) throw InvalidArgument("nonlinearity has a zero coefficient");
    if (i > 0 && monomials_[i].degree <= monomials_[i - 1].degree) {
      throw InvalidArgument("nonlinearity degrees must be strictly increasing");
    }
  }
}

void VfideProblem::validate() const {
  if (order < 1) throw InvalidArgument("order p must be >= 1");
  if (alphas.size() != order) {
    throw InvalidArgument("expected " + std::to_string(order) + " initial values (alphas), got " +
                          std::to_string(alphas.size()));
  }
  if (a_coeffs.size() != order - 1) {
    throw InvalidArgument("expected " + std::to_string(order - 1) + " coefficients a_j, got " +
                          std::to_string(a_coeffs.size()));
  }
  if (!(a < b)) throw InvalidArgument("domain requires a < b");
  if (split.empty()) throw InvalidArgument("split of f must have at least one part");
}

ExpPoly VfideProblem::rhs() const {
  ExpPoly f;
  for (const auto& x : split) f += x;
  return f;
}

ExpPoly VfideProblem::split_part(std::size_t k) const { return k < split.size() ? split[k] : ExpPoly{}; }

ExpPoly initial_guess(const VfideProblem& prob) {
  const IntegralOrigin origin = prob.origin();
  ExpPoly u0;
  for (unsigned k = 0; k < prob.order && k < prob.alphas.size(); ++k) {
    u0 += ExpPoly::shifted_power(prob.a, k) * (prob.alphas[k] / factorial(k));
  }
  const ExpPoly x0 = prob.split_part(0);
  if (!x0.is_zero()) u0 += repeated_integral(x0, prob.order, origin);
  return u0;
}

ExpPoly apply_volterra(const SeparableKernel& kernel, const ExpPoly& integrand,
                       const IntegralOrigin& origin) {
  ExpPoly out;
  if (integrand.is_zero()) return out;
  for (const auto& part : kernel.parts) {
    out += part.g * antiderivative(part.h * integrand, origin);
  }
  return out;
}

ExpPoly apply_fredholm(const SeparableKernel& kernel, const ExpPoly& integrand,
                       const std::pair<Rational, Rational>& domain) {
  ExpPoly out;
  if (integrand.is_zero()) return out;
  for (const auto& part : kernel.parts) {
    const ExpConstant value = definite_integral(part.h * integrand, domain.first, domain.second);
    out += part.g * value.rational_value("Fredholm integral over [" + domain.first.to_string() + ", " +
                                         domain.second.to_string() + "]");
  }
  return out;
}

ExpPoly apply_nonlinearity_coeff(const PowerNonlinearity& f, std::span<const ExpPoly> iterates,
                                 unsigned m) {
  if (iterates.size() <= m) {
    throw ArityMismatch("homotopy coefficient " + std::to_string(m) + " needs " + std::to_string(m + 1) +
                        " iterates, got " + std::to_string(iterates.size()));
  }
  ExpPoly out;
  if (f.is_zero()) return out;

  // power[j] holds the q^j coefficient of (sum_i u_i q^i)^d, truncated at q^m.
  const std::vector<ExpPoly> base(iterates.begin(), iterates.begin() + m + 1);
  std::vector<ExpPoly> power(m + 1);
  power[0] = ExpPoly(Rational(1));
  unsigned degree = 0;
  for (const auto& mono : f.monomials()) {
    while (degree < mono.degree) {
      std::vector<ExpPoly> next(m + 1);
      for (unsigned j = 0; j <= m; ++j) {
        for (unsigned i = 0; i <= j; ++i) {
          if (power[i].is_zero() || base[j - i].is_zero()) continue;
          next[j] += power[i] * base[j - i];
        }
      }
      power = std::move(next);
      ++degree;
    }
    out += power[m] * mono.coeff;
  }
  return out;
}

ExpPoly apply_n_coeff(const VfideProblem& prob, std::span<const ExpPoly> iterates, unsigned m) {
  if (iterates.size() <= m) {
    throw ArityMismatch("N coefficient " + std::to_string(m) + " needs " + std::to_string(m + 1) +
                        " iterates, got " + std::to_string(iterates.size()));
  }
  const ExpPoly& um = iterates[m];
  ExpPoly out = differentiate(um, prob.order);
  for (unsigned j = 1; j < prob.order && j <= prob.a_coeffs.size(); ++j) {
    const ExpPoly& aj = prob.a_coeffs[j - 1];
    if (!aj.is_zero()) out += aj * differentiate(um, j);
  }
  if (!prob.lambda1.is_zero() && !prob.kernel1.is_zero()) {
    out -= apply_volterra(prob.kernel1, apply_nonlinearity_coeff(prob.f1, iterates, m), prob.origin()) *
           prob.lambda1;
  }
  if (!prob.lambda2.is_zero() && !prob.kernel2.is_zero()) {
    out -= apply_fredholm(prob.kernel2, apply_nonlinearity_coeff(prob.f2, iterates, m), {prob.a, prob.b}) *
           prob.lambda2;
  }
  return out;
}

}  // namespace hamvf
