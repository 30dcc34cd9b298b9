#pragma once

#include <array>
#include <cstdint>

#include "valab/vec.hpp"

namespace valab {

/// Philox4x32-10 counter-based generator (Salmon et al., SC'11).
/// A pure function of (counter, key).
std::array<std::uint32_t, 4> philox4x32(std::array<std::uint32_t, 4> counter, std::array<std::uint32_t, 2> key);

/// Random draws addressed by (sample index, lane), keyed by a 64-bit seed and
/// a 32-bit stream tag. Any draw can be produced independently of all others.
class CounterRng {
 public:
  CounterRng(std::uint64_t seed, std::uint32_t stream) noexcept : seed_(seed), stream_(stream) {}

  /// 128 random bits for (index, block).
  std::array<std::uint32_t, 4> block(std::uint64_t index, std::uint32_t block) const noexcept;

  /// Uniform double in the open interval (0, 1).
  double uniform(std::uint64_t index, std::uint64_t lane) const noexcept;

  /// n independent standard normals (Box-Muller on consecutive blocks).
  Vec gaussian_vector(std::uint64_t index, std::size_t n) const;

  /// Uniform direction on S^{n-1}: normalized gaussian_vector.
  Vec unit_vector(std::uint64_t index, std::size_t n) const;

 private:
  std::uint64_t seed_;
  std::uint32_t stream_;
};

}  // namespace valab
