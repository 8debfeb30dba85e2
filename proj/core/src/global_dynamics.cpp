#include "ddg/global_dynamics.hpp"

#include "ddg/errors.hpp"
#include "ddg/random.hpp"

namespace ddg {
namespace {

template <typename Vec>
Vec erase_at(const Vec& v, Eigen::Index j) {
  Vec out(v.size() - 1);
  out << v.head(j), v.tail(v.size() - j - 1);
  return out;
}

template <typename Vec, typename Scalar>
Vec insert_at(const Vec& v, Eigen::Index j, Scalar value) {
  Vec out(v.size() + 1);
  out.head(j) = v.head(j);
  out[j] = value;
  out.tail(v.size() - j) = v.tail(v.size() - j);
  return out;
}

template <typename Mat>
Mat erase_row_col(const Mat& m, Eigen::Index j) {
  const Eigen::Index n = m.rows();
  Mat out(n - 1, n - 1);
  for (Eigen::Index r = 0, rr = 0; r < n; ++r) {
    if (r == j) continue;
    for (Eigen::Index c = 0, cc = 0; c < n; ++c) {
      if (c == j) continue;
      out(rr, cc++) = m(r, c);
    }
    ++rr;
  }
  return out;
}

template <typename Mat>
Mat insert_row_col(const Mat& m, Eigen::Index j) {
  const Eigen::Index n = m.rows();
  Mat out = Mat::Zero(n + 1, n + 1);
  for (Eigen::Index r = 0; r < n; ++r)
    for (Eigen::Index c = 0; c < n; ++c) out(r < j ? r : r + 1, c < j ? c : c + 1) = m(r, c);
  return out;
}

void shock_component(DgcState& dgc, const GeneratorState& state, RandomStream& stream) {
  const GlobalSettings& g = state.globals;
  const Bounds& b = state.bounds;
  const double shift = stream.beta_symmetric(g.alpha) * g.shift_severity;
  const Eigen::VectorXd dir = stream.unit_vector(dgc.dims());
  for (Eigen::Index j = 0; j < dgc.dims(); ++j)
    dgc.center[j] = reflect(dgc.center[j] + shift * dir[j], b.lower[j], b.upper[j]).value;

  dgc.weight = reflect(dgc.weight + stream.beta_symmetric(g.alpha) * g.weight_severity, b.weight.min,
                       b.weight.max).value;
  for (Eigen::Index j = 0; j < dgc.dims(); ++j)
    dgc.sigma[j] = reflect(dgc.sigma[j] + stream.beta_symmetric(g.alpha) * g.sigma_severity, b.sigma.min,
                           b.sigma.max).value;
  for (Eigen::Index j = 0; j + 1 < dgc.dims(); ++j)
    for (Eigen::Index k = j + 1; k < dgc.dims(); ++k)
      dgc.theta(j, k) = reflect(dgc.theta(j, k) + stream.beta_symmetric(g.alpha) * g.angle_severity,
                                b.angle.min, b.angle.max).value;
  dgc.invalidate_rotation();
}

}  // namespace

bool global_shock(GeneratorState& state, RandomStream& stream) {
  if (!stream.bernoulli(state.globals.shock_prob)) return false;
  for (auto& dgc : state.dgcs) shock_component(dgc, state, stream);
  state.needs_resample = true;
  return true;
}

int step_within(int current, int sign, int step, CountRange range) {
  int next = current + sign * step;
  if (range.contains(next)) return next;
  next = current - sign * step;
  return range.contains(next) ? next : current;
}

StructuralChange change_dgc_count(GeneratorState& state, RandomStream& stream) {
  StructuralChange out;
  if (!stream.bernoulli(state.globals.dgc_count_prob)) return out;
  out.fired = true;
  out.before = state.m();
  const int sign = stream.rand_sign();
  out.after = step_within(out.before, sign, state.globals.dgc_step, state.bounds.components);

  while (state.m() > out.after) {
    const auto i = static_cast<std::size_t>(stream.uniform_int(0, state.m() - 1));
    state.dgcs.erase(state.dgcs.begin() + static_cast<std::ptrdiff_t>(i));
    out.indices.push_back(i);
  }
  while (state.m() < out.after) {
    out.indices.push_back(state.dgcs.size());
    state.dgcs.push_back(make_random_dgc(state.bounds, state.local_defaults, state.next_serial++, stream));
  }
  state.needs_resample = true;
  return out;
}

void remove_variable(GeneratorState& state, std::size_t j, RandomStream& stream) {
  Bounds& b = state.bounds;
  const auto ji = static_cast<Eigen::Index>(j);
  if (ji >= b.active_dims() || b.active_dims() < 2)
    throw ModelViolation("remove_variable: index out of range or last variable");
  b.lower = erase_at(b.lower, ji);
  b.upper = erase_at(b.upper, ji);
  for (auto& dgc : state.dgcs) {
    dgc.center = erase_at(dgc.center, ji);
    dgc.sigma = erase_at(dgc.sigma, ji);
    dgc.dir_sigma = erase_at(dgc.dir_sigma, ji);
    dgc.theta = erase_row_col(dgc.theta, ji);
    dgc.dir_theta = erase_row_col(dgc.dir_theta, ji);
    Eigen::VectorXd v = erase_at(dgc.velocity, ji);
    const double n = v.norm();
    dgc.velocity = n > 0.0 ? Eigen::VectorXd(v / n) : stream.unit_vector(v.size());
    dgc.invalidate_rotation();
  }
}

void insert_variable(GeneratorState& state, std::size_t j, RandomStream& stream) {
  Bounds& b = state.bounds;
  const auto ji = static_cast<Eigen::Index>(j);
  if (ji > b.active_dims() || b.active_dims() >= b.dims.max)
    throw ModelViolation("insert_variable: index out of range or dimension limit reached");
  const double lo = b.configured_lower[j];
  const double hi = b.configured_upper[j];
  b.lower = insert_at(b.lower, ji, lo);
  b.upper = insert_at(b.upper, ji, hi);
  const Eigen::Index d = b.active_dims();
  for (auto& dgc : state.dgcs) {
    dgc.center = insert_at(dgc.center, ji, stream.uniform(lo, hi));
    dgc.sigma = insert_at(dgc.sigma, ji, stream.uniform(b.sigma.min, b.sigma.max));
    dgc.dir_sigma = insert_at(dgc.dir_sigma, ji, stream.rand_sign());
    dgc.theta = insert_row_col(dgc.theta, ji);
    dgc.dir_theta = insert_row_col(dgc.dir_theta, ji);
    for (Eigen::Index a = 0; a < d; ++a) {
      if (a == ji) continue;
      const Eigen::Index r = std::min(a, ji);
      const Eigen::Index c = std::max(a, ji);
      dgc.theta(r, c) = stream.uniform(b.angle.min, b.angle.max);
      dgc.dir_theta(r, c) = stream.rand_sign();
    }
    Eigen::VectorXd v = insert_at(dgc.velocity, ji, stream.uniform(-1.0, 1.0));
    dgc.velocity = v / v.norm();
    dgc.invalidate_rotation();
  }
}

StructuralChange change_var_count(GeneratorState& state, RandomStream& stream) {
  StructuralChange out;
  if (!stream.bernoulli(state.globals.var_count_prob)) return out;
  out.fired = true;
  out.before = state.d();
  const int sign = stream.rand_sign();
  out.after = step_within(out.before, sign, state.globals.var_step, state.bounds.dims);

  while (state.d() > out.after) {
    const auto j = static_cast<std::size_t>(stream.uniform_int(0, state.d() - 1));
    remove_variable(state, j, stream);
    out.indices.push_back(j);
  }
  while (state.d() < out.after) {
    const auto j = static_cast<std::size_t>(stream.uniform_int(0, state.d()));
    insert_variable(state, j, stream);
    out.indices.push_back(j);
  }
  state.needs_resample = true;
  return out;
}

StructuralChange change_cluster_count(GeneratorState& state, RandomStream& stream) {
  StructuralChange out;
  if (!stream.bernoulli(state.globals.cluster_count_prob)) return out;
  out.fired = true;
  out.before = state.kappa;
  const int sign = stream.rand_sign();
  state.kappa = step_within(state.kappa, sign, state.globals.cluster_step, state.bounds.clusters);
  out.after = state.kappa;
  return out;
}

}  // namespace ddg
