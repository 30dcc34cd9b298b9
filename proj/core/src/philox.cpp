#include "valab/philox.hpp"

#include <cmath>
#include <numbers>

namespace valab {

namespace {

constexpr std::uint32_t kMul0 = 0xD2511F53;
constexpr std::uint32_t kMul1 = 0xCD9E8D57;
constexpr std::uint32_t kWeyl0 = 0x9E3779B9;
constexpr std::uint32_t kWeyl1 = 0xBB67AE85;

inline void mulhilo(std::uint32_t a, std::uint32_t b, std::uint32_t& lo, std::uint32_t& hi) {
  const std::uint64_t p = static_cast<std::uint64_t>(a) * b;
  lo = static_cast<std::uint32_t>(p);
  hi = static_cast<std::uint32_t>(p >> 32);
}

inline double to_open_unit(std::uint64_t bits) {
  // 53 random bits, shifted by half an ulp so that 0 and 1 are excluded.
  return (static_cast<double>(bits >> 11) + 0.5) * 0x1.0p-53;
}

}  // namespace

std::array<std::uint32_t, 4> philox4x32(std::array<std::uint32_t, 4> ctr, std::array<std::uint32_t, 2> key) {
  for (int round = 0; round < 10; ++round) {
    std::uint32_t lo0, hi0, lo1, hi1;
    mulhilo(kMul0, ctr[0], lo0, hi0);
    mulhilo(kMul1, ctr[2], lo1, hi1);
    ctr = {hi1 ^ ctr[1] ^ key[0], lo1, hi0 ^ ctr[3] ^ key[1], lo0};
    key[0] += kWeyl0;
    key[1] += kWeyl1;
  }
  return ctr;
}

std::array<std::uint32_t, 4> CounterRng::block(std::uint64_t index, std::uint32_t block) const noexcept {
  return philox4x32({static_cast<std::uint32_t>(index), static_cast<std::uint32_t>(index >> 32), block, stream_},
                    {static_cast<std::uint32_t>(seed_), static_cast<std::uint32_t>(seed_ >> 32)});
}

double CounterRng::uniform(std::uint64_t index, std::uint64_t lane) const noexcept {
  const auto b = block(index, static_cast<std::uint32_t>(lane / 2));
  const std::size_t h = 2 * (lane % 2);
  return to_open_unit(static_cast<std::uint64_t>(b[h]) | (static_cast<std::uint64_t>(b[h + 1]) << 32));
}

Vec CounterRng::gaussian_vector(std::uint64_t index, std::size_t n) const {
  Vec g(n);
  for (std::size_t j = 0; 2 * j < n; ++j) {
    const auto b = block(index, static_cast<std::uint32_t>(j));
    const double u1 = to_open_unit(static_cast<std::uint64_t>(b[0]) | (static_cast<std::uint64_t>(b[1]) << 32));
    const double u2 = to_open_unit(static_cast<std::uint64_t>(b[2]) | (static_cast<std::uint64_t>(b[3]) << 32));
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double t = 2.0 * std::numbers::pi * u2;
    g[2 * j] = r * std::cos(t);
    if (2 * j + 1 < n) g[2 * j + 1] = r * std::sin(t);
  }
  return g;
}

Vec CounterRng::unit_vector(std::uint64_t index, std::size_t n) const {
  Vec g = gaussian_vector(index, n);
  // |g| = 0 needs u1 to round to 1 in every pair; re-draw from a shifted
  // block range in that case.
  for (std::uint32_t attempt = 1; !(g.norm() > 1e-300); ++attempt) {
    g = CounterRng(seed_ ^ (0x9E3779B97F4A7C15ull * attempt), stream_).gaussian_vector(index, n);
  }
  return g / g.norm();
}

}  // namespace valab
