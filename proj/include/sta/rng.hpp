#pragma once

#include <cstdint>
#include <string_view>

#include "sta/algebra.hpp"

// splitmix64 is the project-wide random source: a 64-bit shift/multiply
// generator that is trivially portable, so reports reproduce bit-for-bit
// across platforms and across serial/parallel suite execution. Each suite
// check derives its own stream from (seed, check name).

namespace sta {

struct SplitMix64 {
  std::uint64_t state = 0;

  explicit SplitMix64(std::uint64_t seed = 0) : state(seed) {}

  std::uint64_t next_u64() {
    std::uint64_t z = (state += 0x9E3779B97F4A7C15ull);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }

  // Uniform in [0, 1), 53-bit resolution.
  double next_double() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * next_double(); }
};

inline std::uint64_t fnv1a64(std::string_view s) {
  std::uint64_t h = 0xCBF29CE484222325ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 0x100000001B3ull;
  }
  return h;
}

// Per-check sub-seed so parallel and serial suite runs draw identical streams.
inline std::uint64_t derive_seed(std::uint64_t seed, std::string_view name) {
  SplitMix64 mix(seed ^ fnv1a64(name));
  return mix.next_u64();
}

inline Multivector random_multivector(const AlgebraPtr& alg, SplitMix64& rng) {
  Multivector m(alg);
  for (unsigned k = 0; k < m.size(); ++k)
    m.at(k) = rng.uniform(-1.0, 1.0);
  return m;
}

inline Multivector random_even_multivector(const AlgebraPtr& alg, SplitMix64& rng) {
  Multivector m(alg);
  for (unsigned k = 0; k < m.size(); ++k)
    if ((std::popcount(k) & 1) == 0)
      m.at(k) = rng.uniform(-1.0, 1.0);
  return m;
}

inline Multivector random_blade_bivector(const AlgebraPtr& alg, SplitMix64& rng) {
  // A single random grade-2 blade with random weight (squares to a scalar).
  std::vector<unsigned> planes;
  for (unsigned k = 0; k < alg->size(); ++k)
    if (std::popcount(k) == 2)
      planes.push_back(k);
  const unsigned pick = planes[static_cast<std::size_t>(rng.next_u64() % planes.size())];
  return Multivector::blade(alg, pick, rng.uniform(-2.0, 2.0));
}

} // namespace sta
