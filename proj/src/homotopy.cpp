#include "hamvf/homotopy.hpp"

#include <cmath>

#include "hamvf/calculus.hpp"
#include "hamvf/error.hpp"

namespace hamvf {

std::string_view to_string(Variant v) {
  switch (v) {
    case Variant::ham: return "HAM";
    case Variant::mham: return "MHAM";
    case Variant::staged_ham: return "mHAM";
    case Variant::q_ham: return "QHAM";
    case Variant::nd_ham: return "NDHAM";
  }
  return "?";
}

std::optional<Variant> parse_variant(std::string_view name) {
  if (name == "HAM") return Variant::ham;
  if (name == "MHAM") return Variant::mham;
  if (name == "mHAM") return Variant::staged_ham;
  if (name == "QHAM" || name == "q-HAM" || name == "qHAM") return Variant::q_ham;
  if (name == "NDHAM" || name == "ND-HAM") return Variant::nd_ham;
  return std::nullopt;
}

void MethodConfig::validate() const {
  if (hbar.is_zero()) throw InvalidArgument("hbar must be nonzero");
  if (qham_n < 1) throw InvalidArgument("q-HAM n must be >= 1");
  if (iterations < 1) throw InvalidArgument("iterations must be >= 1");
  if (!(divergence_bound > 0.0)) throw InvalidArgument("divergence bound must be positive");
}

Rational chi(unsigned m, Variant variant, unsigned qham_n) {
  if (m <= 1) return Rational{};
  return variant == Variant::q_ham ? Rational(static_cast<long>(qham_n)) : Rational(1);
}

ExpPoly residual_term(const VfideProblem& prob, const MethodConfig& config,
                      std::span<const ExpPoly> iterates, unsigned m) {
  if (m < 1) throw InvalidArgument("residual_term requires m >= 1");
  if (iterates.size() != m) {
    throw ArityMismatch("residual_term R_" + std::to_string(m) + " needs " + std::to_string(m) +
                        " iterates, got " + std::to_string(iterates.size()));
  }
  ExpPoly r = apply_n_coeff(prob, iterates, m - 1);
  switch (config.variant) {
    case Variant::ham:
    case Variant::q_ham:
      if (m == 1) r -= prob.rhs();
      break;
    case Variant::mham:
      r -= prob.split_part(m - 1);
      break;
    case Variant::staged_ham:
      r -= prob.split_part(m);
      break;
    case Variant::nd_ham:
      if (m == 1) {
        r -= prob.split_part(0) + prob.split_part(1);
      } else if (m < prob.split.size()) {
        // hbar * R_m must contribute -hbar^{m-1} x_m to L[u_m - u_{m-1}].
        r -= prob.split_part(m) * config.hbar.pow(static_cast<int>(m) - 2);
      }
      break;
  }
  return r;
}

ExpPoly step(const VfideProblem& prob, const MethodConfig& config, std::span<const ExpPoly> iterates,
             unsigned m) {
  const IntegralOrigin origin = prob.origin();
  const ExpPoly r = residual_term(prob, config, iterates, m);
  ExpPoly out = repeated_integral(r, prob.order, origin) * config.hbar;

  // mHAM couples u_1 to u_0 as well: L[u_1 - u_0] = hbar (R_1 - x_1).
  const Rational coupling =
      config.variant == Variant::staged_ham ? Rational(1) : chi(m, config.variant, config.qham_n);
  if (!coupling.is_zero()) {
    const ExpPoly& prev = iterates[m - 1];
    if (m == 1) {
      // u_0 carries the initial data; J^p D^p strips its Taylor part.
      const auto data = taylor_data(prev, prob.order, origin);
      out += j_of_d(prev, prob.order, data, origin) * coupling;
    } else {
      // u_{m-1}^{(k)}(a) = 0 for m - 1 >= 1, so J^p D^p u_{m-1} = u_{m-1}.
      out += prev * coupling;
    }
  }
  return out;
}

SeriesSolution run(const VfideProblem& prob, const MethodConfig& config) {
  prob.validate();
  config.validate();

  SeriesSolution sol;
  sol.config = config;
  sol.problem = prob;
  sol.iterates.reserve(config.iterations + 1);
  sol.iterates.push_back(config.initial_guess ? *config.initial_guess : initial_guess(prob));

  const double log2_bound = std::log2(config.divergence_bound);
  for (unsigned m = 1; m <= config.iterations; ++m) {
    ExpPoly next = step(prob, config, sol.iterates, m);
    const double magnitude = next.max_log2_coeff();
    if (!sol.divergence && magnitude > log2_bound) sol.divergence = Divergence{m, magnitude};
    sol.iterates.push_back(std::move(next));
  }

  sol.weights.reserve(sol.iterates.size());
  const Rational ratio = config.variant == Variant::q_ham
                             ? Rational(1) / Rational(static_cast<long>(config.qham_n))
                             : Rational(1);
  Rational w(1);
  for (std::size_t m = 0; m < sol.iterates.size(); ++m) {
    sol.weights.push_back(w);
    w *= ratio;
  }
  return sol;
}

ExpPoly partial_sum(const SeriesSolution& sol, unsigned m) {
  if (m >= sol.iterates.size()) {
    throw InvalidArgument("partial_sum index " + std::to_string(m) + " exceeds M = " +
                          std::to_string(sol.iterates.size() - 1));
  }
  ExpPoly sum;
  for (unsigned i = 0; i <= m; ++i) {
    const Rational w = i < sol.weights.size() ? sol.weights[i] : Rational(1);
    sum += sol.iterates[i] * w;
  }
  return sum;
}

}  // namespace hamvf
