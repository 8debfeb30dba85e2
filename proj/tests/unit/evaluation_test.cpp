#include <doctest.h>

#include <cmath>
#include <limits>
#include <set>

#include "support.hpp"

using namespace ddg;
using Eigen::MatrixXd;

namespace {

double brute_force_distance(const MatrixXd& centers, const MatrixXd& points) {
  double total = 0.0;
  for (Eigen::Index i = 0; i < points.cols(); ++i) {
    double best = std::numeric_limits<double>::infinity();
    for (Eigen::Index c = 0; c < centers.cols(); ++c) {
      double sq = 0.0;
      for (Eigen::Index j = 0; j < points.rows(); ++j) {
        const double diff = points(j, i) - centers(j, c);
        sq += diff * diff;
      }
      best = std::min(best, std::sqrt(sq));
    }
    total += best;
  }
  return total;
}

std::vector<EvaluationRecord> deployed_series(std::vector<double> deployed) {
  std::vector<EvaluationRecord> r;
  for (std::size_t i = 0; i < deployed.size(); ++i)
    r.push_back({static_cast<std::int64_t>(i + 1), 0.0, std::nullopt, 0.0, deployed[i]});
  return r;
}

std::vector<EvaluationRecord> values(std::vector<double> v) {
  std::vector<EvaluationRecord> r;
  for (std::size_t i = 0; i < v.size(); ++i) r.push_back({static_cast<std::int64_t>(i + 1), v[i], std::nullopt, 0, 0});
  return r;
}

}  // namespace

TEST_CASE("intra-cluster distance examples") {
  ClusteringSolution one{MatrixXd::Zero(2, 1)};
  CHECK(intra_cluster_distance(one, MatrixXd::Zero(2, 1)) == 0.0);
  MatrixXd p(2, 1);
  p << 3, 4;
  CHECK(intra_cluster_distance(one, p) == 5.0);
  CHECK(intra_cluster_distance(one, MatrixXd(2, 0)) == 0.0);
  CHECK_THROWS_AS(intra_cluster_distance(one, MatrixXd::Zero(3, 4)), StaleSolution);
  CHECK_THROWS_AS(intra_cluster_distance(ClusteringSolution{MatrixXd(2, 0)}, p), ModelViolation);
}

TEST_CASE("intra-cluster distance matches the brute-force sum") {
  RandomStream rng(1);
  for (int trial = 0; trial < 100; ++trial) {
    const auto d = rng.uniform_int(1, 6);
    const auto k = rng.uniform_int(1, 8);
    const auto n = rng.uniform_int(1, 200);
    MatrixXd centers(d, k), points(d, n);
    for (auto& x : centers.reshaped()) x = rng.uniform(-50, 50);
    for (auto& x : points.reshaped()) x = rng.uniform(-80, 80);
    const double expected = brute_force_distance(centers, points);
    CHECK(std::abs(intra_cluster_distance({centers}, points) - expected) <= 1e-9 * std::max(1.0, expected));

    // Order of centers and points does not matter.
    const MatrixXd flipped_centers = centers.rowwise().reverse();
    const MatrixXd flipped_points = points.rowwise().reverse();
    CHECK(std::abs(intra_cluster_distance({flipped_centers}, flipped_points) - expected) <=
          1e-9 * std::max(1.0, expected));
  }
}

TEST_CASE("nearest center ties go to the lowest index") {
  MatrixXd c(1, 3);
  c << -1, 1, 1;
  CHECK(nearest_center({c}, Eigen::VectorXd::Zero(1)) == 0);
  CHECK(nearest_center({c}, Eigen::VectorXd::Constant(1, 2.0)) == 1);
}

TEST_CASE("offline performance examples") {
  CHECK(offline_performance(values({4.0})) == 4.0);
  CHECK(offline_performance(values({10, 8, 12, 7})) == 8.25);

  auto r = values({10, 8, 12, 7});
  r[2].rescored = 20.0;  // data changed before the third evaluation
  // running best: 10, 8, 12, 7
  CHECK(offline_performance(r) == 9.25);
  r[2].rescored = 9.0;
  // running best: 10, 8, 9, 7
  CHECK(offline_performance(r) == 8.5);
  CHECK_THROWS(offline_performance({}));
}

TEST_CASE("root survival examples") {
  std::vector<double> dep(300, 1.0);
  dep[99] = dep[149] = dep[299] = 10.0;
  CHECK(root_survival(deployed_series(dep), 5.0) == 100.0);

  CHECK(root_survival(deployed_series(std::vector<double>(40, 1.0)), 5.0) == 40.0);
  CHECK(root_survival(deployed_series({9, 9, 9, 9}), 5.0) == 1.0);
  // Trailing open interval counts.
  CHECK(root_survival(deployed_series({1, 9, 1, 1}), 5.0) == 2.0);
  CHECK_THROWS_AS(root_survival(deployed_series({1}), std::numeric_limits<double>::infinity()), ConfigError);
}

TEST_CASE("baseline on a static scenario") {
  const auto cfg = preset("fig2a");
  Engine engine(cfg, 3, 10);
  RandomStream rng(derive_seed(3, "optimizer"));
  const auto records = baseline_optimize(engine, 1, rng);
  REQUIRE(records.size() == 1);
  CHECK(engine.tick() == 1);

  Engine engine2(cfg, 3, 2000);
  const auto recs = baseline_optimize(engine2, 2000, rng);
  CHECK(recs.size() == 2000);
  for (std::size_t i = 1; i < recs.size(); ++i) CHECK(recs[i].best <= recs[i - 1].best);
}

TEST_CASE("baseline is reproducible") {
  const auto cfg = preset("kitchen-sink");
  auto go = [&cfg] {
    Engine engine(cfg, 9, 3000);
    RandomStream rng(derive_seed(9, "optimizer"));
    return baseline_optimize(engine, 3000, rng);
  };
  const auto a = go(), b = go();
  REQUIRE(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK(a[i].value == b[i].value);
    CHECK(a[i].best == b[i].best);
  }
}

TEST_CASE("records replay against the event log") {
  auto cfg = preset("kitchen-sink");
  cfg.global.var_count_prob = cfg.global.cluster_count_prob = 2e-3;
  cfg.global.shock_prob = 1e-3;
  Engine engine(cfg, 12, 20000);
  RandomStream rng(derive_seed(12, "optimizer"));
  std::set<std::int64_t> change_ticks;
  const auto records = baseline_optimize(engine, 20000, rng, {6, 0.2, 1e9}, [&](const ChangeEvent& e) {
    if (e.kind != EventKind::local && e.kind != EventKind::global_shock && e.kind != EventKind::dgc_count)
      change_ticks.insert(e.tick);
  });
  REQUIRE(records.size() == 20000);

  double best = std::numeric_limits<double>::infinity();
  double sum = 0.0;
  for (const auto& r : records) {
    const bool changed = change_ticks.contains(r.tick);
    REQUIRE((r.rescored.has_value() == (changed && std::isfinite(best))));
    if (changed) best = r.rescored.value_or(best);
    best = std::min(best, r.value);
    REQUIRE(r.best == best);
    sum += best;
  }
  CHECK(offline_performance(records) == sum / 20000.0);
}
