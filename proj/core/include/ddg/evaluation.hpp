#pragma once

// Clustering objectives, dynamic performance measures and a reference
// optimizer that drives the engine one tick per objective evaluation.

#include <cstdint>
#include <limits>
#include <map>
#include <optional>
#include <span>
#include <string>

#include <Eigen/Core>

#include "ddg/engine.hpp"

namespace ddg {

/// Prototype-based clustering solution: one center per column (d x kappa).
struct ClusteringSolution {
  Eigen::MatrixXd centers;

  Eigen::Index dims() const noexcept { return centers.rows(); }
  Eigen::Index clusters() const noexcept { return centers.cols(); }
};

/// Pluggable objective, minimized.
class Objective {
 public:
  virtual ~Objective() = default;
  virtual std::string name() const = 0;
  /// `points` holds one point per column. Throws StaleSolution on a dimension mismatch.
  virtual double evaluate(const ClusteringSolution& solution, const Eigen::MatrixXd& points) const = 0;
};

/// Sum over points of the Euclidean distance to the nearest center.
class IntraClusterDistance final : public Objective {
 public:
  std::string name() const override { return "intra-cluster-distance"; }
  double evaluate(const ClusteringSolution& solution, const Eigen::MatrixXd& points) const override;
};

double intra_cluster_distance(const ClusteringSolution& solution, const Eigen::MatrixXd& points);
double intra_cluster_distance(const ClusteringSolution& solution, const DatasetWindow& window);

/// Index of the nearest center; ties go to the lowest index.
Eigen::Index nearest_center(const ClusteringSolution& solution, const Eigen::VectorXd& point);

/// One function evaluation. `rescored` is set when the dataset (or the
/// problem shape) changed before this evaluation and holds the incumbent's
/// free re-evaluation on the new data. `deployed` is the objective of the
/// deployed solution at this tick, used for robustness over time.
struct EvaluationRecord {
  std::int64_t tick = 0;
  double value = 0.0;
  std::optional<double> rescored;
  double best = 0.0;
  double deployed = 0.0;
};

/// Mean over evaluations of the running best, recomputed from `value` and
/// `rescored`: after a change the running best restarts from the rescored
/// incumbent, otherwise it only improves.
double offline_performance(std::span<const EvaluationRecord> records);

/// Mean length, in evaluations, of deployment intervals. An interval closes
/// at the first evaluation whose deployed objective exceeds `threshold`.
double root_survival(std::span<const EvaluationRecord> records, double threshold);

struct BaselineOptions {
  int population = 6;
  double repair_prob = 0.2;  // share of candidates produced by center reassignment
  /// Deployment quality threshold; redeploys the current best when the
  /// deployed solution's objective exceeds it. Infinite disables redeployment.
  double root_threshold = std::numeric_limits<double>::infinity();
};

/// Population search over cluster centers. Each objective evaluation advances
/// `engine` by one tick; the post-change re-evaluation of the incumbent is
/// bookkeeping and costs no tick. Stops after `budget` evaluations or when the
/// engine's horizon is reached.
/// Events fired by the engine are forwarded to `events` when given.
std::vector<EvaluationRecord> baseline_optimize(Engine& engine, std::int64_t budget, RandomStream& stream,
                                                const BaselineOptions& options = {},
                                                const EventSink& events = {});

struct RunReport {
  std::uint64_t seed = 0;
  std::int64_t evaluations = 0;
  double offline_performance = 0.0;
  std::optional<double> root_threshold;
  std::optional<double> root_survival;
  double final_best = 0.0;
  std::map<std::string, std::size_t> event_counts;
};

}  // namespace ddg
