#pragma once

#include <cstdint>
#include <numbers>
#include <optional>
#include <string>
#include <vector>

#include "ddg/model.hpp"

namespace ddg {

/// Severities, probabilities and step sizes of the large-impact dynamics.
struct GlobalSettings {
  double shift_severity = 30.0;
  double sigma_severity = 5.0;
  double weight_severity = 0.625;
  double angle_severity = 0.5 * std::numbers::pi;
  double alpha = 0.1;  // shape of the symmetric Beta(alpha, alpha)

  double shock_prob = 1e-4;
  double dgc_count_prob = 1e-4;
  double var_count_prob = 1e-4;
  double cluster_count_prob = 1e-4;

  int dgc_step = 1;
  int var_step = 1;
  int cluster_step = 1;

  bool operator==(const GlobalSettings&) const = default;
};

struct SamplingSettings {
  std::size_t capacity = 2500;
  double sample_prob = 0.05;
  double refresh_fraction = 0.02;  // share of the window replaced per incremental sample

  bool operator==(const SamplingSettings&) const = default;
};

/// The full environment at one tick.
struct GeneratorState {
  std::int64_t tick = 0;
  int kappa = 1;
  std::vector<DgcState> dgcs;
  Bounds bounds;
  GlobalSettings globals;
  SamplingSettings sampling;
  LocalSettings local_defaults;  // copied into newly created components

  std::uint64_t next_serial = 0;
  bool needs_resample = false;

  int d() const noexcept { return static_cast<int>(bounds.active_dims()); }
  int m() const noexcept { return static_cast<int>(dgcs.size()); }
};

/// First broken invariant across bounds, counts and every component.
std::optional<std::string> find_violation(const GeneratorState& state);

/// Digest over every component's parameters plus d, m and kappa.
std::uint64_t state_digest(const GeneratorState& state);

}  // namespace ddg
