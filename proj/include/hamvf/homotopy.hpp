#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "hamvf/exp_poly.hpp"
#include "hamvf/problem.hpp"
#include "hamvf/rational.hpp"

namespace hamvf {

/// Iteration scheme. All share the deformation equation
///   L[u_m - chi_m u_{m-1}] = hbar R_m,   L = D^p,  H(t) = 1,
/// and differ in chi_m, in what R_m subtracts from the N coefficient, and in the
/// summation weights.
enum class Variant {
  ham,         ///< standard HAM; R_m subtracts f at m = 1
  mham,        ///< MHAM; R_m subtracts x_{m-1}, the q^{m-1} part of x_0 + q x_1 + ... + q^n x_n
  staged_ham,  ///< mHAM; L[u_m - u_{m-1}] = hbar (R_m - x_m) for every m >= 1
  q_ham,       ///< q-HAM; chi_m = n, partial sums weighted by (1/n)^m
  nd_ham,      ///< ND-HAM; u_0 from L[u_0] = x_0, split parts enter through g(t; q)
};

std::string_view to_string(Variant v);
/// Accepts "HAM", "MHAM", "mHAM", "QHAM", "q-HAM", "NDHAM", "ND-HAM".
std::optional<Variant> parse_variant(std::string_view name);

struct MethodConfig {
  Variant variant = Variant::ham;
  Rational hbar{-1};
  unsigned qham_n = 1;
  unsigned iterations = 5;
  std::optional<ExpPoly> initial_guess;
  std::string label;
  /// An iterate whose largest |coefficient| exceeds this is flagged as diverging.
  double divergence_bound = 1e300;

  void validate() const;
  std::string display_label() const { return label.empty() ? std::string(to_string(variant)) : label; }

  friend bool operator==(const MethodConfig&, const MethodConfig&) = default;
};

struct Divergence {
  unsigned iterate = 0;
  double log2_magnitude = 0.0;
};

struct SeriesSolution {
  std::vector<ExpPoly> iterates;  // u_0 ... u_M
  std::vector<Rational> weights;  // w_0 ... w_M
  MethodConfig config;
  VfideProblem problem;
  std::optional<Divergence> divergence;
};

/// chi_m: 0 at m = 1, otherwise 1 (n for q-HAM).
Rational chi(unsigned m, Variant variant, unsigned qham_n);

/// R_m for the given scheme from u_0 ... u_{m-1} (iterates.size() == m).
ExpPoly residual_term(const VfideProblem& prob, const MethodConfig& config,
                      std::span<const ExpPoly> iterates, unsigned m);

/// u_m from u_0 ... u_{m-1} (iterates.size() == m).
ExpPoly step(const VfideProblem& prob, const MethodConfig& config, std::span<const ExpPoly> iterates,
             unsigned m);

SeriesSolution run(const VfideProblem& prob, const MethodConfig& config);

/// sum_{i <= m} w_i u_i.
ExpPoly partial_sum(const SeriesSolution& sol, unsigned m);
inline ExpPoly partial_sum(const SeriesSolution& sol) {
  return partial_sum(sol, static_cast<unsigned>(sol.iterates.size() - 1));
}

}  // namespace hamvf
