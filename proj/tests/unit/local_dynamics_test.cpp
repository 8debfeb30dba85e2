#include <doctest.h>

#include <cmath>
#include <numbers>

#include "support.hpp"

using namespace ddg;
using Eigen::VectorXd;

namespace {

DgcState drifting(const Bounds& b, std::uint64_t seed) {
  RandomStream rng(seed);
  return make_random_dgc(b, LocalSettings{}, 0, rng);
}

double net_displacement(double rho, std::uint64_t seed) {
  auto b = test::make_bounds(2, -1000, 1000);
  RandomStream rng(seed);
  DgcState g = make_random_dgc(b, LocalSettings{}, 0, rng);
  g.center.setZero();
  g.local.rho = rho;
  g.local.shift_severity = 1.0;
  for (int t = 0; t < 1000; ++t) shift_center(g, b, rng);
  return g.center.norm();
}

}  // namespace

TEST_CASE("velocity update without correlation is a fresh direction") {
  RandomStream a(3), b(3);
  const VectorXd v = Eigen::Vector3d(1, 0, 0);
  const VectorXd updated = update_velocity(v, 0.0, a);
  const VectorXd fresh = b.unit_vector(3);
  CHECK((updated - fresh).cwiseAbs().maxCoeff() < 1e-15);
}

TEST_CASE("velocity stays unit length for every correlation") {
  RandomStream rng(4);
  VectorXd v = rng.unit_vector(4);
  for (double rho : {0.0, 0.3, 0.5, 0.9, 1.0}) {
    for (int i = 0; i < 1000; ++i) {
      v = update_velocity(v, rho, rng);
      REQUIRE(std::abs(v.norm() - 1.0) < 1e-12);
    }
  }
  const VectorXd fixed = update_velocity(v, 1.0, rng);
  CHECK((fixed - v).norm() < 1e-12);
}

TEST_CASE("stronger correlation turns less per update") {
  auto mean_turn = [](double rho) {
    RandomStream rng(5);
    VectorXd v = rng.unit_vector(2);
    double sum = 0.0;
    for (int i = 0; i < 10000; ++i) {
      const VectorXd next = update_velocity(v, rho, rng);
      sum += std::acos(std::clamp(next.dot(v), -1.0, 1.0));
      v = next;
    }
    return sum / 10000;
  };
  CHECK(mean_turn(0.9) < mean_turn(0.5));
  CHECK(mean_turn(0.5) < mean_turn(0.0));
}

TEST_CASE("zero shift severity updates only the velocity") {
  const auto b = test::make_bounds(3);
  auto g = drifting(b, 6);
  g.local.shift_severity = 0.0;
  const VectorXd c = g.center, v = g.velocity;
  RandomStream rng(7);
  shift_center(g, b, rng);
  CHECK(g.center == c);
  CHECK(g.velocity != v);
}

TEST_CASE("center at a bound moving outward is reflected inside") {
  const auto b = test::make_bounds(2, 0, 100);
  auto g = drifting(b, 8);
  g.center << 0.0, 50.0;
  g.velocity << -1.0, 0.0;
  g.local.rho = 1.0;
  g.local.shift_severity = 5.0;
  RandomStream rng(9);
  std::vector<DirectionFlip> flips;
  shift_center(g, b, rng, &flips);
  CHECK(g.center[0] > 0.0);
  CHECK(g.center[0] <= 100.0);
  REQUIRE(flips.size() == 1);
  CHECK(flips[0].parameter == DriftedParameter::center);
  CHECK(flips[0].j == 0);
  CHECK(flips[0].cause == FlipCause::boundary);
  CHECK(g.velocity[0] == doctest::Approx(1.0));
  CHECK(std::abs(g.velocity.norm() - 1.0) < 1e-12);
}

TEST_CASE("drift_scalar with zero severity keeps the value") {
  RandomStream rng(10);
  const auto s = drift_scalar(3.0, 1, 0.0, 0.0, 10.0, 0.0, rng);
  CHECK(s.value == 3.0);
  CHECK(s.direction == 1);
  CHECK_FALSE(s.random_flip);
  CHECK_FALSE(s.boundary_flip);
  CHECK(rng.draw_count() == 3);
}

TEST_CASE("without random flips the drift is a boundary-to-boundary sawtooth") {
  RandomStream rng(11);
  double y = 50.0;
  int dir = 1;
  int boundary_flips = 0;
  double lowest = y, highest = y;
  for (int t = 0; t < 20000; ++t) {
    const auto s = drift_scalar(y, dir, 1.0, 0.0, 100.0, 0.0, rng);
    REQUIRE_FALSE(s.random_flip);
    if (!s.boundary_flip) {
      REQUIRE(s.direction == dir);
      REQUIRE((s.value - y) * dir >= 0.0);
    } else {
      REQUIRE(s.direction == -dir);
      ++boundary_flips;
    }
    y = s.value;
    dir = s.direction;
    lowest = std::min(lowest, y);
    highest = std::max(highest, y);
  }
  CHECK(boundary_flips > 50);
  CHECK(lowest < 2.0);
  CHECK(highest > 98.0);
}

TEST_CASE("frequent small flips keep the drift near its start") {
  int near = 0;
  RandomStream rng(12);
  for (int rep = 0; rep < 1000; ++rep) {
    double y = 50.0;
    int dir = rng.rand_sign();
    for (int t = 0; t < 1000; ++t) {
      const auto s = drift_scalar(y, dir, 0.1, 0.0, 100.0, 0.5, rng);
      y = s.value;
      dir = s.direction;
    }
    near += std::abs(y - 50.0) < 25.0;
  }
  CHECK(near >= 950);
}

TEST_CASE("local change gate") {
  const auto b = test::make_bounds(3);
  auto g = drifting(b, 13);
  g.local.change_prob = 0.0;
  const auto before = parameter_digest(g);
  RandomStream rng(14);
  for (int i = 0; i < 100; ++i) CHECK_FALSE(apply_local_changes(g, b, rng).changed);
  CHECK(parameter_digest(g) == before);

  g.local = {0.0, 0.0, 0.0, 0.0, 0.5, 0.0, 1.0};
  for (int i = 0; i < 100; ++i) {
    const auto out = apply_local_changes(g, b, rng);
    CHECK(out.changed);
    CHECK(out.flips.empty());
  }
  CHECK(parameter_digest(g) == before);
}

TEST_CASE("local change firing rate") {
  const auto b = test::make_bounds(2);
  auto g = drifting(b, 15);
  g.local.change_prob = 0.05;
  RandomStream rng(16);
  int fired = 0;
  for (int i = 0; i < 100000; ++i) fired += apply_local_changes(g, b, rng).changed;
  CHECK(fired >= 4500);
  CHECK(fired <= 5500);
}

TEST_CASE("long local drift keeps every invariant") {
  const auto b = test::make_bounds(4);
  auto g = drifting(b, 17);
  g.local = {10.0, 3.0, 0.5, 1.0, 0.7, 0.1, 1.0};
  RandomStream rng(18);
  for (int i = 0; i < 100000; ++i) {
    apply_local_changes(g, b, rng);
    if ((i & 1023) == 0) REQUIRE_FALSE(find_violation(g, b).has_value());
  }
  CHECK_FALSE(find_violation(g, b).has_value());
  CHECK((rotation_of(g).entries - build_rotation(g.theta).entries).norm() == 0.0);
}

TEST_CASE("flip records name their parameter") {
  const auto b = test::make_bounds(2);
  auto g = drifting(b, 19);
  g.local = {1.0, 1.0, 0.1, 0.1, 0.9, 1.0, 1.0};
  RandomStream rng(20);
  const auto out = apply_local_changes(g, b, rng);
  int random_flips = 0;
  for (const auto& f : out.flips) random_flips += f.cause == FlipCause::random;
  // sigma[0], sigma[1], weight and theta(0,1) each flip with certainty.
  CHECK(random_flips == 4);
}

TEST_CASE("net displacement grows with correlation") {
  std::vector<double> medians;
  for (double rho : {0.0, 0.5, 0.9}) {
    std::vector<double> net;
    for (int rep = 0; rep < 100; ++rep) net.push_back(net_displacement(rho, 1000 + rep));
    medians.push_back(test::median(net));
  }
  CHECK(medians[0] < medians[1]);
  CHECK(medians[1] < medians[2]);
  CHECK(medians[0] < 0.2 * medians[2]);
}
