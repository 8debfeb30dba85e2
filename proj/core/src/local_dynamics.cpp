#include "ddg/local_dynamics.hpp"

#include <cmath>

#include "ddg/errors.hpp"
#include "ddg/random.hpp"

namespace ddg {

Eigen::VectorXd update_velocity(const Eigen::VectorXd& v, double rho, RandomStream& stream) {
  if (v.size() < 1) throw ModelViolation("update_velocity: empty velocity");
  for (;;) {
    const Eigen::VectorXd u = stream.unit_vector(v.size());
    const Eigen::VectorXd blend = (1.0 - rho) * u + rho * v;
    const double n = blend.norm();
    if (n > 0.0) return blend / n;
  }
}

void shift_center(DgcState& dgc, const Bounds& bounds, RandomStream& stream,
                  std::vector<DirectionFlip>* flips) {
  dgc.velocity = update_velocity(dgc.velocity, dgc.local.rho, stream);
  const double step = stream.half_normal() * dgc.local.shift_severity;
  for (Eigen::Index j = 0; j < dgc.dims(); ++j) {
    const auto r = reflect(dgc.center[j] + step * dgc.velocity[j], bounds.lower[j], bounds.upper[j]);
    dgc.center[j] = r.value;
    if (r.flipped) {
      dgc.velocity[j] = -dgc.velocity[j];
      if (flips) flips->push_back({DriftedParameter::center, static_cast<int>(j), -1, FlipCause::boundary});
    }
  }
}

DriftStep drift_scalar(double y, int dir, double severity, double lo, double hi, double flip_prob,
                       RandomStream& stream) {
  DriftStep out{y, dir, false, false};
  if (stream.bernoulli(flip_prob)) {
    out.direction = -out.direction;
    out.random_flip = true;
  }
  const double n = stream.half_normal();
  const auto r = reflect(y + out.direction * n * severity, lo, hi);
  out.value = r.value;
  if (r.flipped) {
    out.direction = -out.direction;
    out.boundary_flip = true;
  }
  return out;
}

namespace {

void record(std::vector<DirectionFlip>& flips, const DriftStep& s, DriftedParameter p, int j, int k) {
  if (s.random_flip) flips.push_back({p, j, k, FlipCause::random});
  if (s.boundary_flip) flips.push_back({p, j, k, FlipCause::boundary});
}

}  // namespace

LocalChangeOutcome apply_local_changes(DgcState& dgc, const Bounds& bounds, RandomStream& stream) {
  LocalChangeOutcome out;
  if (!stream.bernoulli(dgc.local.change_prob)) return out;
  out.changed = true;

  const LocalSettings& ls = dgc.local;
  shift_center(dgc, bounds, stream, &out.flips);

  for (Eigen::Index j = 0; j < dgc.dims(); ++j) {
    const auto s = drift_scalar(dgc.sigma[j], dgc.dir_sigma[j], ls.sigma_severity, bounds.sigma.min,
                                bounds.sigma.max, ls.flip_prob, stream);
    dgc.sigma[j] = s.value;
    dgc.dir_sigma[j] = s.direction;
    record(out.flips, s, DriftedParameter::sigma, static_cast<int>(j), -1);
  }

  const auto w = drift_scalar(dgc.weight, dgc.dir_weight, ls.weight_severity, bounds.weight.min,
                              bounds.weight.max, ls.flip_prob, stream);
  dgc.weight = w.value;
  dgc.dir_weight = w.direction;
  record(out.flips, w, DriftedParameter::weight, -1, -1);

  bool angles_moved = false;
  for (Eigen::Index j = 0; j + 1 < dgc.dims(); ++j) {
    for (Eigen::Index k = j + 1; k < dgc.dims(); ++k) {
      const auto a = drift_scalar(dgc.theta(j, k), dgc.dir_theta(j, k), ls.angle_severity, bounds.angle.min,
                                  bounds.angle.max, ls.flip_prob, stream);
      angles_moved = angles_moved || a.value != dgc.theta(j, k);
      dgc.theta(j, k) = a.value;
      dgc.dir_theta(j, k) = a.direction;
      record(out.flips, a, DriftedParameter::angle, static_cast<int>(j), static_cast<int>(k));
    }
  }
  if (angles_moved) dgc.invalidate_rotation();
  return out;
}

}  // namespace ddg
