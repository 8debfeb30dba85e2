#include "ddg/model.hpp"

#include <cmath>
#include <sstream>

#include "ddg/digest.hpp"
#include "ddg/errors.hpp"
#include "ddg/random.hpp"

namespace ddg {
namespace {

constexpr double kUnitTolerance = 1e-12;

bool is_strictly_upper(const Eigen::MatrixXd& m) {
  for (Eigen::Index r = 0; r < m.rows(); ++r)
    for (Eigen::Index c = 0; c <= r; ++c)
      if (m(r, c) != 0.0) return false;
  return true;
}

}  // namespace

void Bounds::validate() const {
  auto fail = [](const std::string& what) { throw ModelViolation("bounds: " + what); };
  if (lower.size() != upper.size()) fail("lower/upper length mismatch");
  for (Eigen::Index j = 0; j < lower.size(); ++j)
    if (!(lower[j] < upper[j])) fail("lower bound must be below upper bound in every dimension");
  if (!(sigma.min > 0.0 && sigma.min < sigma.max)) fail("sigma range must satisfy 0 < min < max");
  if (!(weight.min > 0.0 && weight.min < weight.max)) fail("weight range must satisfy 0 < min < max");
  if (!(angle.min < angle.max)) fail("angle range must satisfy min < max");
  if (!(dims.min >= 1 && dims.min <= dims.max)) fail("dimension range must satisfy 1 <= min <= max");
  if (!(components.min >= 1 && components.min <= components.max))
    fail("component range must satisfy 1 <= min <= max");
  if (!(clusters.min >= 1 && clusters.min <= clusters.max))
    fail("cluster range must satisfy 1 <= min <= max");
  if (configured_lower.size() != static_cast<std::size_t>(dims.max) ||
      configured_upper.size() != static_cast<std::size_t>(dims.max))
    fail("configured bounds must cover every dimension up to dims.max");
}

RotationMatrix build_rotation(const Eigen::MatrixXd& theta) {
  if (theta.rows() != theta.cols()) throw ModelViolation("build_rotation: angle matrix is not square");
  if (!is_strictly_upper(theta))
    throw ModelViolation("build_rotation: angle matrix must be strictly upper triangular");
  if (!theta.allFinite()) throw ModelViolation("build_rotation: angle is not finite");
  const Eigen::Index d = theta.rows();
  Eigen::MatrixXd r = Eigen::MatrixXd::Identity(d, d);
  for (Eigen::Index j = 0; j + 1 < d; ++j) {
    for (Eigen::Index k = j + 1; k < d; ++k) {
      const double a = theta(j, k);
      if (a == 0.0) continue;
      const double c = std::cos(a);
      const double s = std::sin(a);
      // R * G only touches columns j and k.
      for (Eigen::Index row = 0; row < d; ++row) {
        const double rj = r(row, j);
        const double rk = r(row, k);
        r(row, j) = rj * c + rk * s;
        r(row, k) = -rj * s + rk * c;
      }
    }
  }
  return RotationMatrix{std::move(r)};
}

const RotationMatrix& rotation_of(DgcState& dgc) {
  if (!dgc.rotation) dgc.rotation = build_rotation(dgc.theta);
  return *dgc.rotation;
}

Eigen::VectorXd sample_point(const DgcState& dgc, const RotationMatrix& rotation,
                             const Eigen::VectorXd& noise) {
  const Eigen::Index d = dgc.dims();
  if (noise.size() != d || dgc.sigma.size() != d || rotation.entries.rows() != d ||
      rotation.entries.cols() != d)
    throw ModelViolation("sample_point: dimension mismatch");
  Eigen::RowVectorXd scaled = noise.cwiseProduct(dgc.sigma).transpose();
  Eigen::RowVectorXd rotated = scaled * rotation.entries;
  return rotated.transpose() + dgc.center;
}

Reflected reflect(double value, double lo, double hi) {
  if (!std::isfinite(value)) throw ModelViolation("reflect: value is not finite");
  if (!(lo < hi)) throw ModelViolation("reflect: empty interval");
  if (value >= lo && value <= hi) return {value, false};

  const double width = hi - lo;
  // Far excursions: every two crossings is a shift by 2*width, so drop whole
  // periods first. The residue is then folded exactly as below.
  if (std::abs(value - lo) > 64.0 * width) {
    const double period = 2.0 * width;
    double shifted = std::fmod(value - lo, period);
    if (shifted < 0.0) shifted += period;
    value = lo + shifted;
    if (value > hi) value = 2.0 * hi - value;
    return {value, true};
  }
  while (value < lo || value > hi) value = value < lo ? 2.0 * lo - value : 2.0 * hi - value;
  return {value, true};
}

DgcState make_random_dgc(const Bounds& bounds, const LocalSettings& local, std::uint64_t serial,
                         RandomStream& stream) {
  const Eigen::Index d = bounds.active_dims();
  DgcState dgc;
  dgc.serial = serial;
  dgc.local = local;
  dgc.center.resize(d);
  dgc.sigma.resize(d);
  for (Eigen::Index j = 0; j < d; ++j) dgc.center[j] = stream.uniform(bounds.lower[j], bounds.upper[j]);
  for (Eigen::Index j = 0; j < d; ++j) dgc.sigma[j] = stream.uniform(bounds.sigma.min, bounds.sigma.max);
  dgc.weight = stream.uniform(bounds.weight.min, bounds.weight.max);
  dgc.theta = Eigen::MatrixXd::Zero(d, d);
  for (Eigen::Index j = 0; j + 1 < d; ++j)
    for (Eigen::Index k = j + 1; k < d; ++k) dgc.theta(j, k) = stream.uniform(bounds.angle.min, bounds.angle.max);
  dgc.velocity = stream.unit_vector(d);
  dgc.dir_sigma.resize(d);
  for (Eigen::Index j = 0; j < d; ++j) dgc.dir_sigma[j] = stream.rand_sign();
  dgc.dir_weight = stream.rand_sign();
  dgc.dir_theta = Eigen::MatrixXi::Zero(d, d);
  for (Eigen::Index j = 0; j + 1 < d; ++j)
    for (Eigen::Index k = j + 1; k < d; ++k) dgc.dir_theta(j, k) = stream.rand_sign();
  return dgc;
}

std::optional<std::string> find_violation(const DgcState& dgc, const Bounds& bounds) {
  const Eigen::Index d = bounds.active_dims();
  std::ostringstream msg;
  msg << "dgc " << dgc.serial << ": ";
  auto fail = [&](const std::string& what) { return std::optional<std::string>(msg.str() + what); };

  if (dgc.center.size() != d || dgc.sigma.size() != d || dgc.velocity.size() != d ||
      dgc.dir_sigma.size() != d || dgc.theta.rows() != d || dgc.theta.cols() != d ||
      dgc.dir_theta.rows() != d || dgc.dir_theta.cols() != d)
    return fail("shape does not match d=" + std::to_string(d));
  if (!is_strictly_upper(dgc.theta)) return fail("theta not strictly upper triangular");
  for (Eigen::Index r = 0; r < d; ++r) {
    for (Eigen::Index c = 0; c < d; ++c) {
      const int f = dgc.dir_theta(r, c);
      if (c <= r ? f != 0 : (f != 1 && f != -1)) return fail("bad angle direction factor");
    }
  }
  if (std::abs(dgc.velocity.norm() - 1.0) > kUnitTolerance) return fail("velocity is not a unit vector");
  for (Eigen::Index j = 0; j < d; ++j) {
    if (!(dgc.center[j] >= bounds.lower[j] && dgc.center[j] <= bounds.upper[j]))
      return fail("center outside data bounds in dimension " + std::to_string(j));
    if (!bounds.sigma.contains(dgc.sigma[j])) return fail("sigma outside range");
    if (dgc.dir_sigma[j] != 1 && dgc.dir_sigma[j] != -1) return fail("bad sigma direction factor");
  }
  if (!bounds.weight.contains(dgc.weight)) return fail("weight outside range");
  if (dgc.dir_weight != 1 && dgc.dir_weight != -1) return fail("bad weight direction factor");
  for (Eigen::Index j = 0; j < d; ++j)
    for (Eigen::Index k = j + 1; k < d; ++k)
      if (dgc.theta(j, k) != 0.0 && !bounds.angle.contains(dgc.theta(j, k))) return fail("angle outside range");
  if (dgc.rotation && dgc.rotation->entries.rows() != d) return fail("stale rotation cache");
  return std::nullopt;
}

std::uint64_t parameter_digest(const DgcState& dgc) {
  Fnv1a h;
  h.add(dgc.center).add(dgc.sigma).add(dgc.weight).add(dgc.theta);
  return h.value();
}

}  // namespace ddg
