#pragma once

#include <cstdint>
#include <random>

namespace carleson::detail {

// Unbiased uniform draw from [0, n) via rejection sampling. std::mt19937_64
// produces an implementation-independent bit stream, and this sampler keeps
// the mapping to [0, n) portable too — std::uniform_int_distribution does not
// promise that.
inline std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t n) {
  if (n <= 1) return 0;
  const std::uint64_t max = ~std::uint64_t{0};
  const std::uint64_t limit = max - max % n;  // multiple of n
  std::uint64_t draw;
  do {
    draw = rng();
  } while (draw >= limit);
  return draw % n;
}

}  // namespace carleson::detail
