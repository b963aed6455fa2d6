#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hamvf/exp_poly.hpp"
#include "hamvf/homotopy.hpp"
#include "hamvf/problem.hpp"

namespace hamvf {

struct MethodRun {
  MethodConfig config;
  /// Replaces the problem's split for this method only.
  std::optional<std::vector<ExpPoly>> split;

  friend bool operator==(const MethodRun&, const MethodRun&) = default;
};

struct OutputSpec {
  bool expressions = true;
  std::optional<ExpPoly> exact;
  std::vector<double> grid;
  std::vector<double> reference;  // optional stored reference values on the grid
  std::string csv_path;
  unsigned residual_grid = 0;  // 0 disables the residual norm line

  friend bool operator==(const OutputSpec&, const OutputSpec&) = default;
};

/// A parsed run configuration: one problem, one or more methods, output switches.
struct RunSpec {
  VfideProblem problem;
  std::vector<MethodRun> methods;
  OutputSpec outputs;

  /// The problem as seen by method i (split override applied).
  VfideProblem problem_for(std::size_t i) const;

  friend bool operator==(const RunSpec&, const RunSpec&) = default;
};

/// Parses the sectioned key-value format:
///
///   [problem]            p, a, b, alphas, a_coeff.<j>, lambda1, lambda2,
///                        kernel1, kernel2, F1, F2, split
///   [method.<label>]     variant, hbar, n, iterations, initial_guess, split, divergence_bound
///   [output]             grid, csv, expressions, exact, reference, residual_grid
///
/// Numbers are exact rationals; '#' starts a comment. Throws ConfigError.
RunSpec parse_config(std::string_view text);

/// Renders a RunSpec back into the config format (parse_config(render_config(s)) == s).
std::string render_config(const RunSpec& spec);

/// Process exit codes of execute().
enum ExitStatus : int { exit_ok = 0, exit_config_error = 2, exit_solver_error = 3 };

/// Fixed-point rendering used in CSV files: 9 decimals, "-0" normalised to "0".
std::string format_decimal(double value);

/// Solves every method, writes the expression listing to `listing`, the CSV table to
/// outputs.csv_path (if set), and diagnostics to `errors`. Returns an ExitStatus.
int execute(const RunSpec& spec, std::ostream& listing, std::ostream& errors);

}  // namespace hamvf
