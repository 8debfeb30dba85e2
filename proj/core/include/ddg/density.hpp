#pragma once

#include <iosfwd>
#include <optional>

#include <Eigen/Core>

#include "ddg/state.hpp"

namespace ddg {

/// Weight-normalized mixture density at x: sum_i p_i N(x; c_i, R_i^T diag(sigma_i^2) R_i).
double mixture_density(const GeneratorState& state, const Eigen::VectorXd& x);

struct GridExtent {
  double x_min, x_max, y_min, y_max;
};

/// Density evaluated at the centers of a resolution x resolution grid.
/// density(iy, ix) belongs to the point (xs[ix], ys[iy]).
struct DensityGrid {
  GridExtent extent;
  Eigen::VectorXd xs;
  Eigen::VectorXd ys;
  Eigen::MatrixXd density;

  double cell_area() const;
};

/// Two-dimensional states only (UnsupportedExport otherwise). The extent
/// defaults to the active data bounds.
DensityGrid emit_density_grid(const GeneratorState& state, int resolution,
                              std::optional<GridExtent> extent = std::nullopt);

/// CSV with header `x1,x2,density`, one row per grid cell.
void write_density_csv(std::ostream& out, const DensityGrid& grid);

}  // namespace ddg
