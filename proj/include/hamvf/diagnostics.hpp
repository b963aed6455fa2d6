#pragma once

#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "hamvf/exp_poly.hpp"
#include "hamvf/homotopy.hpp"
#include "hamvf/problem.hpp"

namespace hamvf {

struct TableColumn {
  std::string label;
  std::vector<double> values;
};

/// Grid values per method plus an optional reference column (shape of a comparison table).
struct ComparisonTable {
  std::vector<double> grid;
  std::vector<TableColumn> columns;
  std::optional<TableColumn> reference;

  /// |column - reference| per grid point; requires a reference column.
  std::vector<double> abs_error(std::size_t column) const;
};

/// Max over a uniform grid on [a, b] of |N[approximant](t) - f(t)|.
double residual_norm(const VfideProblem& prob, const ExpPoly& approximant, unsigned grid_size = 101);

struct ReferencePoint {
  double t = 0.0;
  double value = 0.0;
};

/// |approximant(t) - value| per reference point.
std::vector<double> error_vs_reference(const ExpPoly& approximant, std::span<const ReferencePoint> reference);

/// One column per run (its final partial sum), in input order. Throws GridOutOfDomain
/// if the grid is not strictly increasing inside [a, b] of the runs' problem.
ComparisonTable build_table(std::span<const SeriesSolution> runs, std::span<const double> grid,
                            std::optional<TableColumn> reference = std::nullopt);

}  // namespace hamvf
