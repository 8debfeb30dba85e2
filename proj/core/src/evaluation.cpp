#include "ddg/evaluation.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "ddg/errors.hpp"

namespace ddg {

Eigen::Index nearest_center(const ClusteringSolution& solution, const Eigen::VectorXd& point) {
  Eigen::Index best = 0;
  double best_d2 = std::numeric_limits<double>::infinity();
  for (Eigen::Index c = 0; c < solution.clusters(); ++c) {
    const double d2 = (solution.centers.col(c) - point).squaredNorm();
    if (d2 < best_d2) {
      best_d2 = d2;
      best = c;
    }
  }
  return best;
}

double IntraClusterDistance::evaluate(const ClusteringSolution& solution, const Eigen::MatrixXd& points) const {
  return intra_cluster_distance(solution, points);
}

double intra_cluster_distance(const ClusteringSolution& solution, const Eigen::MatrixXd& points) {
  if (solution.clusters() < 1) throw ModelViolation("clustering solution has no centers");
  if (points.cols() == 0) return 0.0;
  if (solution.dims() != points.rows())
    throw StaleSolution("solution has d=" + std::to_string(solution.dims()) + " but the data has d=" +
                        std::to_string(points.rows()));
  const auto& centers = solution.centers;
  const Eigen::Index k = centers.cols();
  double total = 0.0;
  for (Eigen::Index i = 0; i < points.cols(); ++i) {
    double best = (points.col(i) - centers.col(0)).squaredNorm();
    for (Eigen::Index c = 1; c < k; ++c) best = std::min(best, (points.col(i) - centers.col(c)).squaredNorm());
    total += std::sqrt(best);
  }
  return total;
}

double intra_cluster_distance(const ClusteringSolution& solution, const DatasetWindow& window) {
  return intra_cluster_distance(solution, window.as_matrix());
}

double offline_performance(std::span<const EvaluationRecord> records) {
  if (records.empty()) throw std::invalid_argument("offline_performance: no records");
  double best = std::numeric_limits<double>::infinity();
  double sum = 0.0;
  for (const auto& r : records) {
    if (r.rescored) best = *r.rescored;
    best = std::min(best, r.value);
    sum += best;
  }
  return sum / static_cast<double>(records.size());
}

double root_survival(std::span<const EvaluationRecord> records, double threshold) {
  if (!std::isfinite(threshold)) throw ConfigError("root_threshold", "must be finite");
  if (records.empty()) throw std::invalid_argument("root_survival: no records");
  std::vector<std::int64_t> intervals;
  std::int64_t length = 0;
  for (const auto& r : records) {
    ++length;
    if (r.deployed > threshold) {
      intervals.push_back(length);
      length = 0;
    }
  }
  if (length > 0) intervals.push_back(length);
  double sum = 0.0;
  for (auto n : intervals) sum += static_cast<double>(n);
  return sum / static_cast<double>(intervals.size());
}

// ---------------------------------------------------------------------------
// Baseline optimizer

namespace {

struct Member {
  ClusteringSolution solution;
  double value = std::numeric_limits<double>::infinity();
  double step = 1.0;
};

Eigen::VectorXd random_point(const Eigen::MatrixXd& points, RandomStream& stream) {
  return points.col(stream.uniform_int(0, points.cols() - 1));
}

ClusteringSolution random_solution(const Eigen::MatrixXd& points, int kappa, RandomStream& stream) {
  ClusteringSolution s{Eigen::MatrixXd(points.rows(), kappa)};
  for (int c = 0; c < kappa; ++c) s.centers.col(c) = random_point(points, stream);
  return s;
}

/// Adds or drops centers until there are `kappa`, reseeding at window points.
void fit_cluster_count(ClusteringSolution& s, int kappa, const Eigen::MatrixXd& points, RandomStream& stream) {
  while (s.clusters() > kappa) {
    const Eigen::Index drop = stream.uniform_int(0, s.clusters() - 1);
    Eigen::MatrixXd kept(s.dims(), s.clusters() - 1);
    kept << s.centers.leftCols(drop), s.centers.rightCols(s.clusters() - drop - 1);
    s.centers = std::move(kept);
  }
  while (s.clusters() < kappa) {
    s.centers.conservativeResize(Eigen::NoChange, s.clusters() + 1);
    s.centers.col(s.clusters() - 1) = random_point(points, stream);
  }
}

ClusteringSolution perturb(const ClusteringSolution& s, double step, RandomStream& stream) {
  ClusteringSolution out = s;
  const Eigen::Index c = stream.uniform_int(0, s.clusters() - 1);
  for (Eigen::Index j = 0; j < s.dims(); ++j) out.centers(j, c) += step * stream.normal();
  return out;
}

/// Nearest-point reassignment followed by one Weiszfeld step per center
/// toward the geometric median of its assigned points.
ClusteringSolution reassign(const ClusteringSolution& s, const Eigen::MatrixXd& points) {
  const Eigen::Index k = s.clusters();
  Eigen::MatrixXd num = Eigen::MatrixXd::Zero(s.dims(), k);
  Eigen::VectorXd den = Eigen::VectorXd::Zero(k);
  for (Eigen::Index i = 0; i < points.cols(); ++i) {
    const Eigen::VectorXd p = points.col(i);
    const Eigen::Index c = nearest_center(s, p);
    const double dist = std::max((p - s.centers.col(c)).norm(), 1e-12);
    num.col(c) += p / dist;
    den[c] += 1.0 / dist;
  }
  ClusteringSolution out = s;
  for (Eigen::Index c = 0; c < k; ++c)
    if (den[c] > 0.0) out.centers.col(c) = num.col(c) / den[c];
  return out;
}

double initial_step(const Eigen::MatrixXd& points) {
  if (points.cols() == 0) return 1.0;
  const Eigen::VectorXd spread = points.rowwise().maxCoeff() - points.rowwise().minCoeff();
  return std::max(0.05 * spread.mean(), 1e-6);
}

}  // namespace

std::vector<EvaluationRecord> baseline_optimize(Engine& engine, std::int64_t budget, RandomStream& stream,
                                                const BaselineOptions& options, const EventSink& events) {
  if (budget < 1) throw ConfigError("budget", "must be >= 1");
  if (options.population < 1) throw ConfigError("population", "must be >= 1");
  const IntraClusterDistance objective;
  constexpr double kInf = std::numeric_limits<double>::infinity();

  Eigen::MatrixXd points = engine.window().as_matrix();
  int kappa = engine.state().kappa;
  double base_step = initial_step(points);

  std::vector<Member> members;
  std::optional<ClusteringSolution> best;
  double best_value = kInf;
  std::optional<ClusteringSolution> deployed;
  double deployed_value = kInf;

  std::vector<EvaluationRecord> records;
  records.reserve(static_cast<std::size_t>(std::min<std::int64_t>(budget, 1 << 20)));

  for (std::int64_t e = 0; e < budget && !engine.finished(); ++e) {
    bool data_changed = false;
    bool shape_changed = false;
    for (const auto& ev : engine.advance()) {
      data_changed |= ev.kind == EventKind::incremental_sample || ev.kind == EventKind::full_resample;
      shape_changed |= ev.kind == EventKind::var_count || ev.kind == EventKind::cluster_count;
      if (events) events(ev);
    }

    EvaluationRecord rec;
    rec.tick = engine.tick();
    if (data_changed || shape_changed) {
      points = engine.window().as_matrix();
      kappa = engine.state().kappa;
      if (best) {
        if (best->dims() != points.rows()) {
          // Every solution is stale after a change in d: restart the search.
          base_step = initial_step(points);
          for (auto& m : members) m = Member{random_solution(points, kappa, stream), kInf, base_step};
          best = random_solution(points, kappa, stream);
          deployed_value = kInf;
        } else {
          fit_cluster_count(*best, kappa, points, stream);
          for (auto& m : members) {
            fit_cluster_count(m.solution, kappa, points, stream);
            m.value = kInf;
          }
          if (deployed && deployed->clusters() != kappa) fit_cluster_count(*deployed, kappa, points, stream);
          if (deployed) deployed_value = objective.evaluate(*deployed, points);
        }
        best_value = objective.evaluate(*best, points);
        rec.rescored = best_value;
      }
    }

    ClusteringSolution candidate;
    Member* parent = nullptr;
    if (members.size() < static_cast<std::size_t>(options.population)) {
      candidate = random_solution(points, kappa, stream);
    } else {
      parent = &members[static_cast<std::size_t>(e) % members.size()];
      candidate = stream.bernoulli(options.repair_prob) ? reassign(parent->solution, points)
                                                       : perturb(parent->solution, parent->step, stream);
    }
    const double value = objective.evaluate(candidate, points);
    rec.value = value;

    if (!parent) {
      members.push_back(Member{candidate, value, base_step});
    } else if (value <= parent->value) {
      parent->solution = candidate;
      parent->value = value;
      parent->step *= 1.5;
    } else {
      parent->step = std::max(parent->step * 0.9, 1e-9);
    }

    if (value < best_value) {
      best = candidate;
      best_value = value;
    }
    if (!deployed) {
      deployed = best;
      deployed_value = best_value;
    }
    rec.best = best_value;
    // A stale deployed solution (infinite objective) always ends its interval.
    rec.deployed = deployed_value;
    if (deployed_value > options.root_threshold || deployed_value == kInf) {
      deployed = best;
      deployed_value = best_value;
    }
    records.push_back(rec);
  }
  return records;
}

}  // namespace ddg
