#include "ddg/random.hpp"

#include <cmath>
#include <numbers>

#include "ddg/errors.hpp"

namespace ddg {
namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::uint64_t fnv1a(std::string_view text) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : text) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

}  // namespace

std::uint64_t derive_seed(std::uint64_t master, std::string_view name, std::uint64_t index) {
  return splitmix64(splitmix64(master ^ fnv1a(name)) + splitmix64(index));
}

RandomStream::RandomStream(std::uint64_t seed) : seed_(seed), engine_(seed) {}

RandomStream RandomStream::substream(std::string_view name, std::uint64_t index) const {
  return RandomStream(derive_seed(seed_, name, index));
}

std::uint64_t RandomStream::next_u64() {
  ++draws_;
  return engine_();
}

double RandomStream::uniform01() {
  // 53 random bits, shifted half a step off zero so log() is always finite.
  return (static_cast<double>(next_u64() >> 11) + 0.5) * 0x1.0p-53;
}

double RandomStream::uniform(double lo, double hi) {
  if (!(lo <= hi)) throw ConfigError("", "uniform: lo must not exceed hi");
  return lo + (hi - lo) * uniform01();
}

std::int64_t RandomStream::uniform_int(std::int64_t lo, std::int64_t hi) {
  if (lo > hi) throw ConfigError("", "uniform_int: lo must not exceed hi");
  const auto span = static_cast<double>(hi - lo) + 1.0;
  auto k = static_cast<std::int64_t>(std::floor(uniform01() * span));
  return lo + std::min(k, hi - lo);
}

bool RandomStream::bernoulli(double p) {
  if (!(p >= 0.0 && p <= 1.0)) throw ConfigError("", "bernoulli: probability outside [0, 1]");
  return uniform01() < p;
}

int RandomStream::rand_sign() { return (next_u64() >> 63) != 0 ? 1 : -1; }

double RandomStream::normal() {
  // Box-Muller, cosine branch only: always exactly two base draws.
  const double u1 = uniform01();
  const double u2 = uniform01();
  return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
}

double RandomStream::half_normal() { return std::abs(normal()); }

Eigen::VectorXd RandomStream::unit_vector(Eigen::Index d) {
  if (d < 1) throw ModelViolation("unit_vector: dimension must be at least 1");
  Eigen::VectorXd r(d);
  for (;;) {
    for (Eigen::Index j = 0; j < d; ++j) r[j] = normal();
    const double n = r.norm();
    if (n > 0.0 && std::isfinite(n)) return r / n;
  }
}

double RandomStream::log_gamma(double shape) {
  if (!(shape > 0.0)) throw ConfigError("", "gamma shape must be positive");
  if (shape < 1.0) {
    // Gamma(a) = Gamma(a + 1) * U^(1/a)
    const double boosted = log_gamma(shape + 1.0);
    return boosted + std::log(uniform01()) / shape;
  }
  // Marsaglia & Tsang (2000).
  const double d = shape - 1.0 / 3.0;
  const double c = 1.0 / std::sqrt(9.0 * d);
  for (;;) {
    double x;
    double v;
    do {
      x = normal();
      v = 1.0 + c * x;
    } while (v <= 0.0);
    v = v * v * v;
    const double u = uniform01();
    if (std::log(u) < 0.5 * x * x + d - d * v + d * std::log(v)) return std::log(d * v);
  }
}

double RandomStream::beta_symmetric(double alpha) {
  if (!(alpha > 0.0)) throw ConfigError("", "beta shape alpha must be positive");
  // B = X / (X + Y) with X, Y ~ Gamma(alpha), so 2B - 1 = tanh((log X - log Y) / 2).
  const double lx = log_gamma(alpha);
  const double ly = log_gamma(alpha);
  return std::tanh(0.5 * (lx - ly));
}

}  // namespace ddg
