#pragma once

#include <array>
#include <cmath>
#include <cstdint>
#include <numbers>

namespace hmc {

// Philox4x32-10 counter-based generator (Salmon et al., SC'11 constants).
// Stateless: the output block is a pure function of (counter, key), so any
// (path, step) cell of the random field can be produced independently of
// scheduling.  Verified against the published known-answer vectors.
namespace philox {

inline constexpr std::uint32_t kMul0 = 0xD2511F53u;
inline constexpr std::uint32_t kMul1 = 0xCD9E8D57u;
inline constexpr std::uint32_t kWeyl0 = 0x9E3779B9u;
inline constexpr std::uint32_t kWeyl1 = 0xBB67AE85u;

using Block = std::array<std::uint32_t, 4>;
using Key = std::array<std::uint32_t, 2>;

inline Block round10(Block c, Key k) {
  for (int r = 0; r < 10; ++r) {
    const std::uint64_t p0 = static_cast<std::uint64_t>(kMul0) * c[0];
    const std::uint64_t p1 = static_cast<std::uint64_t>(kMul1) * c[2];
    const std::uint32_t hi0 = static_cast<std::uint32_t>(p0 >> 32);
    const std::uint32_t lo0 = static_cast<std::uint32_t>(p0);
    const std::uint32_t hi1 = static_cast<std::uint32_t>(p1 >> 32);
    const std::uint32_t lo1 = static_cast<std::uint32_t>(p1);
    c = Block{hi1 ^ c[1] ^ k[0], lo1, hi0 ^ c[3] ^ k[1], lo0};
    k[0] += kWeyl0;
    k[1] += kWeyl1;
  }
  return c;
}

inline Block block(std::uint64_t seed, std::uint64_t path, std::uint64_t step) {
  const Block ctr{static_cast<std::uint32_t>(step),
                  static_cast<std::uint32_t>(step >> 32),
                  static_cast<std::uint32_t>(path),
                  static_cast<std::uint32_t>(path >> 32)};
  const Key key{static_cast<std::uint32_t>(seed),
                static_cast<std::uint32_t>(seed >> 32)};
  return round10(ctr, key);
}

// uniform in (0, 1), never exactly 0 or 1
inline double to_unit(std::uint32_t hi, std::uint32_t lo) {
  const std::uint64_t x = (static_cast<std::uint64_t>(hi) << 32) | lo;
  return (static_cast<double>(x >> 11) + 0.5) * 0x1p-53;
}

}  // namespace philox

struct GaussPair {
  double g0, g1;
};

// Two independent standard normals from one Philox block via Box-Muller.
inline GaussPair gauss_pair(std::uint64_t seed, std::uint64_t path,
                            std::uint64_t step) {
  const philox::Block b = philox::block(seed, path, step);
  const double u0 = philox::to_unit(b[0], b[1]);
  const double u1 = philox::to_unit(b[2], b[3]);
  const double rad = std::sqrt(-2.0 * std::log(u0));
  const double ang = 2.0 * std::numbers::pi * u1;
  return GaussPair{rad * std::cos(ang), rad * std::sin(ang)};
}

// splitmix64; used to derive per-stage seeds from the master seed
inline std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t stream) {
  std::uint64_t z = seed + 0x9E3779B97F4A7C15ull * (stream + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

}  // namespace hmc
