#include <doctest.h>

#include <cmath>
#include <numbers>

#include "ddg/random.hpp"
#include "ddg/errors.hpp"

using namespace ddg;

namespace {

// P(|2B-1| > t) for B ~ Beta(a, a), by quadrature. With u = x^a the integrand
// of the lower tail is smooth: int_0^q x^(a-1)(1-x)^(a-1) dx = (1/a) int_0^(q^a) (1-u^(1/a))^(a-1) du.
double beta_tail_mass(double a, double t) {
  const double q = (1.0 - t) / 2.0;
  const double upper = std::pow(q, a);
  const int n = 200000;
  const double h = upper / n;
  double sum = 0.0;
  for (int i = 0; i < n; ++i) {
    const double u = (i + 0.5) * h;
    sum += std::pow(1.0 - std::pow(u, 1.0 / a), a - 1.0);
  }
  const double lower_tail = sum * h / a;
  const double beta_fn = std::tgamma(a) * std::tgamma(a) / std::tgamma(2 * a);
  return 2.0 * lower_tail / beta_fn;
}

struct Moments {
  double mean = 0, var = 0;
};

template <typename F>
Moments moments(int n, F&& draw) {
  double s = 0, s2 = 0;
  for (int i = 0; i < n; ++i) {
    const double x = draw();
    s += x;
    s2 += x * x;
  }
  const double m = s / n;
  return {m, s2 / n - m * m};
}

}  // namespace

TEST_CASE("underlying engine is the standard mt19937_64") {
  RandomStream s(5489);
  std::uint64_t x = 0;
  for (int i = 0; i < 10000; ++i) x = s.next_u64();
  CHECK(x == 9981545732273789042ULL);
  CHECK(s.draw_count() == 10000);
}

TEST_CASE("golden sequence fixture") {
  CHECK(derive_seed(42, "local", 0) == 5010383946361598757ULL);
  CHECK(derive_seed(42, "local", 1) == 1585510426461993010ULL);
  CHECK(derive_seed(42, "sampling", 0) == 11562246790838483861ULL);
  RandomStream s(42);
  CHECK(s.uniform01() == 0.75515553295453897);
  CHECK(s.normal() == doctest::Approx(0.012755354198444343).epsilon(1e-14));
  CHECK(s.beta_symmetric(0.5) == doctest::Approx(0.99977748222927498).epsilon(1e-12));
  CHECK(s.uniform_int(1, 6) == 4);
  CHECK(s.rand_sign() == 1);
}

TEST_CASE("substreams are independent of each other and of the parent") {
  RandomStream root(9);
  auto a = root.substream("local", 0);
  auto b = root.substream("local", 1);
  auto c = root.substream("sampling");
  CHECK(a.seed() != b.seed());
  CHECK(a.seed() != c.seed());
  CHECK(root.substream("local", 0).seed() == a.seed());
  CHECK(root.draw_count() == 0);
  CHECK(a.next_u64() != b.next_u64());
}

TEST_CASE("draw counts per operation") {
  RandomStream s(1);
  auto step = [&s](auto&& op) {
    const auto before = s.draw_count();
    op();
    return s.draw_count() - before;
  };
  CHECK(step([&] { s.next_u64(); }) == 1);
  CHECK(step([&] { s.uniform01(); }) == 1);
  CHECK(step([&] { s.uniform(-2, 5); }) == 1);
  CHECK(step([&] { s.uniform_int(0, 9); }) == 1);
  CHECK(step([&] { s.bernoulli(0.5); }) == 1);
  CHECK(step([&] { s.bernoulli(0.0); }) == 1);
  CHECK(step([&] { s.rand_sign(); }) == 1);
  CHECK(step([&] { s.normal(); }) == 2);
  CHECK(step([&] { s.half_normal(); }) == 2);
  CHECK(step([&] { s.unit_vector(4); }) == 8);
}

TEST_CASE("replaying an interleaved call sequence is bit-identical") {
  RandomStream script(123);
  std::vector<int> ops(5000);
  for (auto& op : ops) op = static_cast<int>(script.uniform_int(0, 6));

  auto play = [&ops](std::uint64_t seed) {
    RandomStream s(seed);
    std::vector<double> out;
    for (int op : ops) {
      switch (op) {
        case 0: out.push_back(s.uniform01()); break;
        case 1: out.push_back(s.normal()); break;
        case 2: out.push_back(s.half_normal()); break;
        case 3: out.push_back(s.beta_symmetric(0.1)); break;
        case 4: out.push_back(static_cast<double>(s.uniform_int(-3, 3))); break;
        case 5: out.push_back(s.unit_vector(3).sum()); break;
        default: out.push_back(s.bernoulli(0.3)); break;
      }
    }
    out.push_back(static_cast<double>(s.draw_count()));
    return out;
  };
  CHECK(play(77) == play(77));
  CHECK(play(77) != play(78));
}

TEST_CASE("uniform and integer ranges") {
  RandomStream s(4);
  int hits[3] = {0, 0, 0};
  for (int i = 0; i < 30000; ++i) {
    const double u = s.uniform01();
    REQUIRE(u > 0.0);
    REQUIRE(u < 1.0);
    const auto k = s.uniform_int(0, 2);
    REQUIRE(k >= 0);
    REQUIRE(k <= 2);
    ++hits[k];
  }
  for (int h : hits) CHECK(std::abs(h / 30000.0 - 1.0 / 3) < 0.01);
  CHECK(s.uniform_int(5, 5) == 5);
  CHECK_THROWS_AS(s.uniform_int(2, 1), ConfigError);
}

TEST_CASE("bernoulli edge cases") {
  RandomStream s(8);
  for (int i = 0; i < 1000; ++i) {
    CHECK_FALSE(s.bernoulli(0.0));
    CHECK(s.bernoulli(1.0));
  }
  CHECK_THROWS_AS(s.bernoulli(-0.1), ConfigError);
  CHECK_THROWS_AS(s.bernoulli(1.1), ConfigError);
  CHECK_THROWS_AS(s.bernoulli(std::nan("")), ConfigError);
}

TEST_CASE("rand_sign is balanced") {
  RandomStream s(10);
  const auto m = moments(100000, [&] { return static_cast<double>(s.rand_sign()); });
  CHECK(std::abs(m.mean) < 0.01);
}

TEST_CASE("normal and half-normal moments") {
  RandomStream s(12);
  const auto n = moments(1000000, [&] { return s.normal(); });
  CHECK(std::abs(n.mean) < 0.005);
  CHECK(std::abs(n.var - 1.0) < 0.005);

  double lowest = 1.0;
  const auto h = moments(1000000, [&] {
    const double x = s.half_normal();
    lowest = std::min(lowest, x);
    return x;
  });
  CHECK(lowest >= 0.0);
  CHECK(h.mean == doctest::Approx(std::sqrt(2.0 / std::numbers::pi)).epsilon(0.01));
  CHECK(h.var == doctest::Approx(1.0 - 2.0 / std::numbers::pi).epsilon(0.01));
}

TEST_CASE("unit vectors") {
  RandomStream s(14);
  for (int i = 0; i < 200; ++i) {
    const auto v = s.unit_vector(1);
    CHECK(std::abs(v[0]) == 1.0);
  }
  Eigen::Vector3d sum = Eigen::Vector3d::Zero();
  for (int i = 0; i < 100000; ++i) {
    const Eigen::VectorXd v = s.unit_vector(3);
    REQUIRE(std::abs(v.norm() - 1.0) < 1e-12);
    sum += v;
  }
  CHECK((sum / 100000.0).cwiseAbs().maxCoeff() < 0.01);
  CHECK(std::abs(s.unit_vector(5).norm() - 1.0) < 1e-12);
  CHECK_THROWS_AS(s.unit_vector(0), ModelViolation);
}

TEST_CASE("symmetric beta variance and tails") {
  RandomStream s(16);
  for (double a : {0.1, 0.2, 1.0, 3.0}) {
    CAPTURE(a);
    const auto m = moments(200000, [&] { return s.beta_symmetric(a); });
    CHECK(std::abs(m.mean) < 0.01);
    CHECK(std::abs(m.var - 1.0 / (2 * a + 1)) < 0.01);
  }

  auto tail = [&s](double a, double t) {
    int hits = 0;
    for (int i = 0; i < 200000; ++i) hits += std::abs(s.beta_symmetric(a)) > t;
    return hits / 200000.0;
  };
  const double heavy = tail(0.1, 0.9);
  CHECK(heavy == doctest::Approx(beta_tail_mass(0.1, 0.9)).epsilon(0.02));
  CHECK(tail(1.0, 0.9) == doctest::Approx(0.1).epsilon(0.03));
  CHECK(heavy > 0.1);
}

TEST_CASE("tiny beta shapes stay finite") {
  RandomStream s(18);
  for (int i = 0; i < 10000; ++i) {
    const double x = s.beta_symmetric(0.05);
    REQUIRE(std::isfinite(x));
    REQUIRE(std::abs(x) <= 1.0);
  }
  CHECK_THROWS_AS(s.beta_symmetric(0.0), ConfigError);
  CHECK_THROWS_AS(s.log_gamma(-1.0), ConfigError);
}
