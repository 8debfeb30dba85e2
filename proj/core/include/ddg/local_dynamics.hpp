#pragma once

// Gradual per-component changes: center drift with momentum and directed
// random walks on widths, weight and angles.

#include <vector>

#include <Eigen/Core>

#include "ddg/model.hpp"

namespace ddg {

class RandomStream;

enum class DriftedParameter { center, sigma, weight, angle };
enum class FlipCause { random, boundary };

/// One inverted direction factor. `j`/`k` index the sigma entry (j) or the
/// angle (j, k); unused indices are -1. For the center, `j` is the velocity
/// component mirrored at a data bound.
struct DirectionFlip {
  DriftedParameter parameter;
  int j = -1;
  int k = -1;
  FlipCause cause;
};

struct LocalChangeOutcome {
  bool changed = false;
  std::vector<DirectionFlip> flips;  // empty unless changed
};

/// Blends a fresh random unit direction into `v`: ((1-rho) u + rho v) / ||.||.
Eigen::VectorXd update_velocity(const Eigen::VectorXd& v, double rho, RandomStream& stream);

/// Updates the velocity, then moves the center by n * shift_severity * v with
/// n half-normal. Each coordinate is reflected into its data bound; a
/// reflected coordinate also mirrors its velocity component so the unit norm
/// is kept and the drift heads back inside.
void shift_center(DgcState& dgc, const Bounds& bounds, RandomStream& stream,
                  std::vector<DirectionFlip>* flips = nullptr);

struct DriftStep {
  double value;
  int direction;
  bool random_flip;
  bool boundary_flip;
};

/// y <- y + dir * n * severity after an optional random inversion of dir
/// (probability flip_prob); reflection at [lo, hi] inverts dir again.
/// Always consumes one Bernoulli and one half-normal draw.
DriftStep drift_scalar(double y, int dir, double severity, double lo, double hi, double flip_prob,
                       RandomStream& stream);

/// Bernoulli(change_prob) gate; when it fires, applies in order the center
/// shift, every sigma entry, the weight and every upper-triangular angle.
LocalChangeOutcome apply_local_changes(DgcState& dgc, const Bounds& bounds, RandomStream& stream);

}  // namespace ddg
