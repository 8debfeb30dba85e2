#pragma once

#include <cstdint>
#include <random>
#include <string_view>

#include <Eigen/Core>

namespace ddg {

/// Identifier of the random-number machinery. Written into every artifact
/// header; bump the suffix whenever a draw sequence can change.
inline constexpr std::string_view kPrngId = "mt19937_64+splitmix64-substreams/v1";

/// Mixes a master seed with a stream name and index into an independent seed.
std::uint64_t derive_seed(std::uint64_t master, std::string_view name, std::uint64_t index = 0);

/// Seeded, replayable random stream.
///
/// The engine is std::mt19937_64, whose output sequence is fixed by the C++
/// standard. Distributions are implemented here rather than taken from
/// <random> because the standard distributions are not bit-reproducible across
/// library implementations.
///
/// Base draws consumed per call (tracked by draw_count()):
///   next_u64, uniform01, uniform, uniform_int, bernoulli, rand_sign : 1
///   normal, half_normal                                              : 2
///   unit_vector(d)                                                   : 2d per attempt
///   log_gamma, beta_symmetric                                        : variable (rejection)
///
/// A stream has a single owner. It may be moved between threads but never
/// shared.
class RandomStream {
 public:
  explicit RandomStream(std::uint64_t seed);

  /// Child stream whose seed is derive_seed(seed(), name, index).
  RandomStream substream(std::string_view name, std::uint64_t index = 0) const;

  std::uint64_t seed() const noexcept { return seed_; }
  std::uint64_t draw_count() const noexcept { return draws_; }

  std::uint64_t next_u64();

  /// Uniform on the open interval (0, 1).
  double uniform01();
  double uniform(double lo, double hi);
  /// Uniform integer in the closed range [lo, hi].
  std::int64_t uniform_int(std::int64_t lo, std::int64_t hi);
  bool bernoulli(double p);
  int rand_sign();

  double normal();
  double half_normal();
  Eigen::VectorXd unit_vector(Eigen::Index d);

  /// Logarithm of a Gamma(shape, 1) variate. Working in log space keeps
  /// shapes well below 1 from underflowing.
  double log_gamma(double shape);

  /// One draw of 2 * Beta(alpha, alpha) - 1, in [-1, 1].
  double beta_symmetric(double alpha);

 private:
  std::uint64_t seed_;
  std::uint64_t draws_ = 0;
  std::mt19937_64 engine_;
};

}  // namespace ddg
