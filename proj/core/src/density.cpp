#include "ddg/density.hpp"

#include <cmath>
#include <numbers>
#include <ostream>

#include "ddg/errors.hpp"
#include "ddg/io.hpp"

namespace ddg {
namespace {

struct ComponentTerm {
  Eigen::VectorXd center;
  Eigen::VectorXd inv_sigma;
  Eigen::MatrixXd rotation_t;
  double scale;  // p_i / ((2 pi)^(d/2) prod sigma)
};

std::vector<ComponentTerm> prepare(const GeneratorState& state) {
  double total = 0.0;
  for (const auto& dgc : state.dgcs) total += dgc.weight;
  if (!(total > 0.0)) throw ModelViolation("mixture density: non-positive weight sum");
  std::vector<ComponentTerm> terms;
  for (const auto& dgc : state.dgcs) {
    const double d = static_cast<double>(dgc.dims());
    const double norm = std::pow(2.0 * std::numbers::pi, d / 2.0) * dgc.sigma.prod();
    terms.push_back({dgc.center, dgc.sigma.cwiseInverse(), build_rotation(dgc.theta).entries.transpose(),
                     dgc.weight / total / norm});
  }
  return terms;
}

double evaluate(const std::vector<ComponentTerm>& terms, const Eigen::VectorXd& x) {
  double sum = 0.0;
  for (const auto& t : terms) {
    // Row convention: x - c = z diag(sigma) R, so z = (x - c) R^T diag(1/sigma).
    const Eigen::VectorXd z = (t.rotation_t.transpose() * (x - t.center)).cwiseProduct(t.inv_sigma);
    sum += t.scale * std::exp(-0.5 * z.squaredNorm());
  }
  return sum;
}

}  // namespace

double mixture_density(const GeneratorState& state, const Eigen::VectorXd& x) {
  if (x.size() != state.d()) throw ModelViolation("mixture_density: dimension mismatch");
  return evaluate(prepare(state), x);
}

double DensityGrid::cell_area() const {
  return (extent.x_max - extent.x_min) / static_cast<double>(xs.size()) * (extent.y_max - extent.y_min) /
         static_cast<double>(ys.size());
}

DensityGrid emit_density_grid(const GeneratorState& state, int resolution, std::optional<GridExtent> extent) {
  if (state.d() != 2) throw UnsupportedExport("density grids need exactly 2 variables, state has d=" +
                                              std::to_string(state.d()));
  if (resolution < 1) throw ConfigError("resolution", "must be >= 1");
  DensityGrid grid;
  grid.extent = extent.value_or(GridExtent{state.bounds.lower[0], state.bounds.upper[0], state.bounds.lower[1],
                                           state.bounds.upper[1]});
  const auto& e = grid.extent;
  const double dx = (e.x_max - e.x_min) / resolution;
  const double dy = (e.y_max - e.y_min) / resolution;
  grid.xs.resize(resolution);
  grid.ys.resize(resolution);
  for (int i = 0; i < resolution; ++i) {
    grid.xs[i] = e.x_min + (i + 0.5) * dx;
    grid.ys[i] = e.y_min + (i + 0.5) * dy;
  }
  const auto terms = prepare(state);
  grid.density.resize(resolution, resolution);
  Eigen::VectorXd p(2);
  for (int iy = 0; iy < resolution; ++iy) {
    for (int ix = 0; ix < resolution; ++ix) {
      p << grid.xs[ix], grid.ys[iy];
      grid.density(iy, ix) = evaluate(terms, p);
    }
  }
  return grid;
}

void write_density_csv(std::ostream& out, const DensityGrid& grid) {
  out << "x1,x2,density\n";
  for (Eigen::Index iy = 0; iy < grid.ys.size(); ++iy)
    for (Eigen::Index ix = 0; ix < grid.xs.size(); ++ix)
      out << format_real(grid.xs[ix]) << ',' << format_real(grid.ys[iy]) << ','
          << format_real(grid.density(iy, ix)) << '\n';
}

}  // namespace ddg
