#pragma once

#include <cmath>
#include <cstdint>
#include <random>

namespace pronet {

// All randomness in the project flows through explicitly seeded mt19937_64
// engines. Streams are decorrelated from a single user seed by mixing in a
// stream id, so adding a consumer never perturbs existing draw sequences.

inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

inline std::mt19937_64 make_rng(std::uint64_t seed, std::uint64_t stream = 0) {
  return std::mt19937_64(splitmix64(seed ^ splitmix64(stream ^ 0x8f1bbcdcbfa53e0bULL)));
}

// Uniform in [0,1) from the top 53 bits. std::generate_canonical is not
// bit-stable across standard library implementations; this is.
inline double next_unit(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

// Unbiased uniform integer in [0, bound) via rejection.
inline std::uint64_t next_below(std::mt19937_64& rng, std::uint64_t bound) {
  const std::uint64_t threshold = (0 - bound) % bound;
  for (;;) {
    const std::uint64_t r = rng();
    if (r >= threshold) return r % bound;
  }
}

// Poisson draw by CDF inversion. One uniform per draw, so replays stay
// aligned no matter what value comes out.
inline int poisson_inverse(std::mt19937_64& rng, double mean) {
  if (mean <= 0.0) return 0;
  const double u = next_unit(rng);
  double p = std::exp(-mean);
  double cdf = p;
  int k = 0;
  while (u >= cdf && k < (1 << 16)) {
    ++k;
    p *= mean / k;
    cdf += p;
  }
  return k;
}

}  // namespace pronet
