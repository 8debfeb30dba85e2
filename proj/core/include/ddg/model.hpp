#pragma once

// Static model of the generator: Gaussian component parameters, rotation
// construction, point synthesis, and boundary reflection.

#include <cstdint>
#include <numbers>
#include <optional>
#include <string>
#include <vector>

#include <Eigen/Core>

namespace ddg {

class RandomStream;

struct Range {
  double min = 0.0;
  double max = 0.0;

  double width() const noexcept { return max - min; }
  bool contains(double v) const noexcept { return v >= min && v <= max; }
  bool operator==(const Range&) const = default;
};

struct CountRange {
  int min = 1;
  int max = 1;

  bool contains(int v) const noexcept { return v >= min && v <= max; }
  bool operator==(const CountRange&) const = default;
};

/// Stationary parameter ranges.
///
/// `lower`/`upper` are the data bounds of the currently active dimensions and
/// follow the variables through insertions and removals. `configured_lower`
/// and `configured_upper` hold one entry per possible dimension (dims.max) and
/// supply bounds for newly inserted variables.
struct Bounds {
  Eigen::VectorXd lower;
  Eigen::VectorXd upper;
  std::vector<double> configured_lower;
  std::vector<double> configured_upper;
  Range sigma;
  Range weight;
  Range angle;
  CountRange dims;
  CountRange components;
  CountRange clusters;

  Eigen::Index active_dims() const noexcept { return lower.size(); }

  /// Throws ModelViolation when a range is empty or a weight could be <= 0.
  void validate() const;
};

/// Per-component severities and probabilities of the gradual local dynamics.
struct LocalSettings {
  double shift_severity = 1.0;
  double sigma_severity = 1.0;
  double weight_severity = 0.125;
  double angle_severity = 0.1 * std::numbers::pi;
  double rho = 0.9;
  double flip_prob = 0.05;
  double change_prob = 0.05;

  bool operator==(const LocalSettings&) const = default;
};

struct RotationMatrix {
  Eigen::MatrixXd entries;
};

/// One dynamic Gaussian component together with its private dynamics state.
struct DgcState {
  std::uint64_t serial = 0;  // stable identity; keys the component's random substream

  Eigen::VectorXd center;
  Eigen::VectorXd sigma;
  Eigen::MatrixXd theta;  // strictly upper triangular, radians
  double weight = 1.0;

  Eigen::VectorXd velocity;  // unit length
  Eigen::VectorXi dir_sigma;
  int dir_weight = 1;
  Eigen::MatrixXi dir_theta;  // strictly upper triangular, entries +-1

  LocalSettings local;

  // Cache of build_rotation(theta). Reset whenever theta or the dimension changes.
  std::optional<RotationMatrix> rotation;

  Eigen::Index dims() const noexcept { return center.size(); }
  void invalidate_rotation() noexcept { rotation.reset(); }
};

/// Product of Givens rotations over the nonzero upper-triangular angles, taken
/// row by row (j outer, k inner) and multiplied on the right.
RotationMatrix build_rotation(const Eigen::MatrixXd& theta);

/// Returns the cached rotation of `dgc`, building it on first use.
const RotationMatrix& rotation_of(DgcState& dgc);

/// (noise .* sigma) * R + center, with the scaled noise treated as a row vector.
/// The result is not clipped to the data bounds.
Eigen::VectorXd sample_point(const DgcState& dgc, const RotationMatrix& rotation,
                             const Eigen::VectorXd& noise);

struct Reflected {
  double value;
  bool flipped;
};

/// Folds `value` back into [lo, hi] by mirroring at the violated bound until it
/// lies inside.
Reflected reflect(double value, double lo, double hi);

/// Draws a component with every parameter uniform in its range, a random unit
/// velocity and random direction factors. `bounds.lower`/`upper` fix d.
DgcState make_random_dgc(const Bounds& bounds, const LocalSettings& local, std::uint64_t serial,
                         RandomStream& stream);

/// First broken invariant of `dgc` against `bounds`, if any.
std::optional<std::string> find_violation(const DgcState& dgc, const Bounds& bounds);

/// FNV-1a digest over center, sigma, weight and theta.
std::uint64_t parameter_digest(const DgcState& dgc);

}  // namespace ddg
