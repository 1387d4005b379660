#pragma once

#include <cstdint>
#include <random>

namespace unideal {

/// All randomness flows through this engine; std::mt19937_64 is fully
/// specified by the standard, so a seed reproduces the same stream everywhere.
using Rng = std::mt19937_64;

/// Uniform integer in [lo, hi]. Rejection sampling on the raw engine output
/// (std::uniform_int_distribution is implementation-defined).
inline std::uint64_t uniform_u64(Rng& rng, std::uint64_t lo, std::uint64_t hi) {
  const std::uint64_t span = hi - lo;
  if (span == UINT64_MAX) return rng();
  const std::uint64_t range = span + 1;
  const std::uint64_t limit = UINT64_MAX - (UINT64_MAX % range);
  std::uint64_t x;
  do {
    x = rng();
  } while (x >= limit);
  return lo + x % range;
}

inline std::int64_t uniform_i64(Rng& rng, std::int64_t lo, std::int64_t hi) {
  const auto span = static_cast<std::uint64_t>(hi) - static_cast<std::uint64_t>(lo);
  return static_cast<std::int64_t>(static_cast<std::uint64_t>(lo) + uniform_u64(rng, 0, span));
}

}  // namespace unideal
