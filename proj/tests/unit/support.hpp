#pragma once

#include <algorithm>
#include <vector>

#include "ddg/ddg.hpp"

namespace ddg::test {

/// Bounds with uniform data range [lo, hi] over `d` active dimensions.
inline Bounds make_bounds(int d, double lo = -100.0, double hi = 100.0, int d_max = 5) {
  Bounds b;
  b.lower = Eigen::VectorXd::Constant(d, lo);
  b.upper = Eigen::VectorXd::Constant(d, hi);
  b.configured_lower.assign(static_cast<std::size_t>(d_max), lo);
  b.configured_upper.assign(static_cast<std::size_t>(d_max), hi);
  b.sigma = {5.0, 25.0};
  b.weight = {0.5, 3.0};
  b.angle = {-3.141592653589793, 3.141592653589793};
  b.dims = {1, d_max};
  b.components = {1, 10};
  b.clusters = {1, 10};
  return b;
}

/// Fully static state (every probability zero) with `m` random components.
inline GeneratorState make_state(int d, int m, std::uint64_t seed = 11, std::size_t capacity = 200) {
  GeneratorState s;
  s.bounds = make_bounds(d);
  s.globals.shock_prob = s.globals.dgc_count_prob = s.globals.var_count_prob = s.globals.cluster_count_prob = 0.0;
  s.sampling = {capacity, 0.0, 0.02};
  s.local_defaults.change_prob = 0.0;
  s.kappa = 3;
  RandomStream init(seed);
  for (int i = 0; i < m; ++i) s.dgcs.push_back(make_random_dgc(s.bounds, s.local_defaults, s.next_serial++, init));
  return s;
}

inline double median(std::vector<double> v) {
  std::sort(v.begin(), v.end());
  const auto n = v.size();
  return n % 2 ? v[n / 2] : 0.5 * (v[n / 2 - 1] + v[n / 2]);
}

}  // namespace ddg::test
