#pragma once

#include <cstdint>
#include <string_view>

#include "hkc/numlin/vec.hpp"

namespace hkc::numlin {

std::uint64_t splitmix64(std::uint64_t x);

/// Stable 64-bit FNV-1a hash, used to turn suite names into stream ids.
std::uint64_t stable_hash(std::string_view s);

/// Counter-based pseudo-random stream keyed by (seed, stream, index).
///
/// Draw k of stream (s, t, i) is a pure function of (s, t, i, k), so any
/// sample can be regenerated in isolation and in any order.
class SampleStream {
 public:
  SampleStream(std::uint64_t seed, std::uint64_t stream, std::uint64_t index);

  std::uint64_t next_u64();
  /// Uniform on [0, 1) with 53 random bits.
  double uniform();
  /// Standard normal (Box-Muller, one value per pair of uniforms).
  double normal();
  AmbientVector gaussian(std::size_t dim);

  /// Child stream for nested sampling (e.g. per-retry).
  [[nodiscard]] SampleStream split(std::uint64_t child) const;

 private:
  std::uint64_t key_;
  std::uint64_t counter_ = 0;
};

}  // namespace hkc::numlin
