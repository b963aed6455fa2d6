#include "hamvf/diagnostics.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "hamvf/error.hpp"

namespace hamvf {

std::vector<double> ComparisonTable::abs_error(std::size_t column) const {
  if (!reference) throw InvalidArgument("table has no reference column");
  const auto& values = columns.at(column).values;
  std::vector<double> out(values.size());
  for (std::size_t i = 0; i < values.size(); ++i) out[i] = std::fabs(values[i] - reference->values[i]);
  return out;
}

double residual_norm(const VfideProblem& prob, const ExpPoly& approximant, unsigned grid_size) {
  if (grid_size < 2) throw InvalidArgument("residual grid needs at least 2 points");
  const ExpPoly single[] = {approximant};
  const ExpPoly defect = apply_n_coeff(prob, single, 0) - prob.rhs();
  const double lo = prob.a.to_double();
  const double hi = prob.b.to_double();
  double worst = 0.0;
  for (unsigned i = 0; i < grid_size; ++i) {
    const double t = i + 1 == grid_size ? hi : lo + (hi - lo) * i / (grid_size - 1);
    worst = std::max(worst, std::fabs(eval_float(defect, t)));
  }
  return worst;
}

std::vector<double> error_vs_reference(const ExpPoly& approximant, std::span<const ReferencePoint> reference) {
  std::vector<double> out;
  out.reserve(reference.size());
  for (const auto& point : reference) out.push_back(std::fabs(eval_float(approximant, point.t) - point.value));
  return out;
}

ComparisonTable build_table(std::span<const SeriesSolution> runs, std::span<const double> grid,
                            std::optional<TableColumn> reference) {
  if (!runs.empty()) {
    const double lo = runs.front().problem.a.to_double();
    const double hi = runs.front().problem.b.to_double();
    for (std::size_t i = 0; i < grid.size(); ++i) {
      if (!(grid[i] >= lo && grid[i] <= hi)) {
        throw GridOutOfDomain("grid point " + std::to_string(grid[i]) + " outside [" + std::to_string(lo) +
                              ", " + std::to_string(hi) + "]");
      }
    }
  }
  for (std::size_t i = 1; i < grid.size(); ++i) {
    if (!(grid[i] > grid[i - 1])) throw GridOutOfDomain("grid must be strictly increasing");
  }
  if (reference && reference->values.size() != grid.size()) {
    throw InvalidArgument("reference column length does not match the grid");
  }

  ComparisonTable table;
  table.grid.assign(grid.begin(), grid.end());
  for (const auto& sol : runs) {
    const ExpPoly approximant = partial_sum(sol);
    TableColumn column{sol.config.display_label(), {}};
    column.values.reserve(grid.size());
    for (double t : grid) column.values.push_back(eval_float(approximant, t));
    table.columns.push_back(std::move(column));
  }
  table.reference = std::move(reference);
  return table;
}

}  // namespace hamvf
