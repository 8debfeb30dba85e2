#pragma once

// Large-impact events: heavy-tailed shocks applied to every component at once
// and structural changes to the number of components, variables and clusters.

#include <cstddef>
#include <vector>

#include "ddg/state.hpp"

namespace ddg {

class RandomStream;

/// Bernoulli(shock_prob) gate; when it fires every component receives
///   center += (2B-1) * s_hat * r/||r||   (fresh r per component)
///   weight += (2B-1) * w_hat
///   sigma_j += (2B-1) * sigma_hat        (each j)
///   theta_jk += (2B-1) * theta_hat       (each j < k)
/// with a fresh B ~ Beta(alpha, alpha) per scalar, everything reflected into
/// range. Returns whether the gate fired.
bool global_shock(GeneratorState& state, RandomStream& stream);

struct StructuralChange {
  bool fired = false;
  int before = 0;
  int after = 0;
  /// Removed positions (in removal order) or inserted positions.
  std::vector<std::size_t> indices;
};

/// current + sign * step, with the sign inverted if that leaves `range`. When
/// neither direction fits, the value is kept.
int step_within(int current, int sign, int step, CountRange range);

/// Adds or removes dgc_step components. Removal picks a uniformly random
/// component; additions are drawn uniformly within all ranges.
StructuralChange change_dgc_count(GeneratorState& state, RandomStream& stream);

/// Adds or removes var_step variables at uniformly random positions, updating
/// every vector, angle matrix, direction factor and the active data bounds.
StructuralChange change_var_count(GeneratorState& state, RandomStream& stream);

/// Changes kappa only; never marks the state for resampling.
StructuralChange change_cluster_count(GeneratorState& state, RandomStream& stream);

/// Removes variable `j` from every component and from the active bounds.
/// Velocities are renormalized, redrawn from `stream` if they vanish.
void remove_variable(GeneratorState& state, std::size_t j, RandomStream& stream);

/// Inserts a new variable at position `j` with random values in range.
void insert_variable(GeneratorState& state, std::size_t j, RandomStream& stream);

}  // namespace ddg
