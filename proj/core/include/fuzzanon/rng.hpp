#pragma once

#include <cstdint>
#include <random>
#include <string_view>
#include <vector>

namespace fuzzanon {

// All randomness in the project flows through this header so that traces are
// bit-exact across platforms. The engine is std::mt19937_64 (its output
// sequence is fixed by the C++ standard); the distribution helpers below are
// our own because the std:: distributions are implementation-defined.

using Rng = std::mt19937_64;

inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

// FNV-1a, used to turn replicate tags like "ba:n=500:m=4:rep=3" into stream ids.
inline std::uint64_t hash_tag(std::string_view tag) {
  std::uint64_t h = 0xCBF29CE484222325ULL;
  for (unsigned char c : tag) {
    h ^= c;
    h *= 0x100000001B3ULL;
  }
  return h;
}

// Derived seed = splitmix64(master ^ stream). Stable: a replicate's seed
// depends only on the master seed and its own tag, never on grid position.
inline std::uint64_t derive_seed(std::uint64_t master, std::uint64_t stream) {
  return splitmix64(master ^ stream);
}

inline std::uint64_t derive_seed(std::uint64_t master, std::string_view tag) {
  return derive_seed(master, hash_tag(tag));
}

// Unbiased integer in [0, bound) via rejection sampling.
inline std::uint64_t uniform_below(Rng& rng, std::uint64_t bound) {
  // 2^64 mod bound, computed with wraparound arithmetic
  const std::uint64_t threshold = (0 - bound) % bound;
  for (;;) {
    const std::uint64_t x = rng();
    if (x >= threshold) return x % bound;
  }
}

// Uniform double in [0, 1) with 53 random bits.
inline double uniform_unit(Rng& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

// Fisher-Yates; std::shuffle is implementation-defined so we roll our own.
template <typename T>
void shuffle(std::vector<T>& v, Rng& rng) {
  for (std::size_t i = v.size(); i > 1; --i) {
    const std::size_t j = uniform_below(rng, i);
    std::swap(v[i - 1], v[j]);
  }
}

}  // namespace fuzzanon
