#ifndef BERTINI_RNG_HPP
#define BERTINI_RNG_HPP

#include <cstdint>
#include <string_view>

namespace bertini {

// Deterministic stream used everywhere randomness is needed, so that runs are
// reproducible bit for bit.  splitmix64 over a seed mixed with an fnv1a hash
// of the stream name; values in F_p by rejection sampling.
struct SplitMix64 {
  std::uint64_t state;

  explicit SplitMix64(std::uint64_t seed) : state(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4b5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  // uniform in [0, n) by rejection
  std::uint64_t below(std::uint64_t n) {
    std::uint64_t limit = n * (~0ull / n);
    for (;;) {
      std::uint64_t u = next();
      if (u < limit) return u % n;
    }
  }
};

inline std::uint64_t fnv1a64(std::string_view s) {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (char c : s) {
    h ^= static_cast<unsigned char>(c);
    h *= 0x100000001b3ull;
  }
  return h;
}

inline SplitMix64 stream_for(std::uint64_t seed, std::string_view name) {
  return SplitMix64(seed ^ fnv1a64(name));
}

}  // namespace bertini

#endif
