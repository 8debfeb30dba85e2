#pragma once

#include <bit>
#include <cstdint>
#include <string_view>

#include <Eigen/Core>

namespace ddg {

/// 64-bit FNV-1a accumulator used for parameter and config digests.
class Fnv1a {
 public:
  Fnv1a& bytes(const void* data, std::size_t n) {
    const auto* p = static_cast<const unsigned char*>(data);
    for (std::size_t i = 0; i < n; ++i) {
      h_ ^= p[i];
      h_ *= 0x100000001b3ULL;
    }
    return *this;
  }
  Fnv1a& add(std::string_view s) { return bytes(s.data(), s.size()); }
  Fnv1a& add(std::uint64_t v) { return bytes(&v, sizeof v); }
  Fnv1a& add(std::int64_t v) { return add(static_cast<std::uint64_t>(v)); }
  Fnv1a& add(double v) { return add(std::bit_cast<std::uint64_t>(v)); }

  template <typename Derived>
  Fnv1a& add(const Eigen::DenseBase<Derived>& m) {
    add(static_cast<std::int64_t>(m.rows()));
    add(static_cast<std::int64_t>(m.cols()));
    for (Eigen::Index c = 0; c < m.cols(); ++c)
      for (Eigen::Index r = 0; r < m.rows(); ++r) add(static_cast<double>(m(r, c)));
    return *this;
  }

  std::uint64_t value() const noexcept { return h_; }

 private:
  std::uint64_t h_ = 0xcbf29ce484222325ULL;
};

}  // namespace ddg
