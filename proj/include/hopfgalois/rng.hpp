// Deterministic PRNG for reproducible sampling; identical on every
// platform, unlike the standard library distributions.

#ifndef HOPFGALOIS_RNG_HPP_
#define HOPFGALOIS_RNG_HPP_

#include <cstdint>

#include "hopfgalois/galois.hpp"

namespace hopfgalois {

struct SplitMix64 {
  std::uint64_t state;

  explicit SplitMix64(std::uint64_t seed) : state(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  long uniform(long lo, long hi) {
    return lo + static_cast<long>(next() % static_cast<std::uint64_t>(hi - lo + 1));
  }
};

// Random element with integer coordinates in [-3, 3], the sampling space
// used by every randomized check.
inline AlgElt random_elt(const GaloisContext& ctx, SplitMix64& rng) {
  AlgElt x = ctx.zero();
  for (std::size_t i = 0; i < ctx.dim(); ++i)
    x.c[i] = Rat(rng.uniform(-3, 3));
  return x;
}

}  // namespace hopfgalois

#endif
