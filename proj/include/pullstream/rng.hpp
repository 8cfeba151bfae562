#pragma once

#include <cstdint>
#include <random>

namespace pullstream {

/// Unbiased draw from [0, bound) via Lemire's multiply-shift rejection.
/// Hand-rolled so the stream does not depend on the standard library's
/// distribution internals.
inline std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound) {
  __uint128_t m = static_cast<__uint128_t>(rng()) * bound;
  auto low = static_cast<std::uint64_t>(m);
  if (low < bound) {
    const std::uint64_t threshold = -bound % bound;
    while (low < threshold) {
      m = static_cast<__uint128_t>(rng()) * bound;
      low = static_cast<std::uint64_t>(m);
    }
  }
  return static_cast<std::uint64_t>(m >> 64);
}

inline int uniform_index(std::mt19937_64& rng, int bound) {
  return static_cast<int>(uniform_below(rng, static_cast<std::uint64_t>(bound)));
}

template <typename T>
void shuffle_in_place(std::vector<T>& xs, std::mt19937_64& rng) {
  for (std::size_t i = xs.size(); i > 1; --i)
    std::swap(xs[i - 1], xs[uniform_below(rng, i)]);
}

}  // namespace pullstream
