#pragma once

#include <cstdint>

namespace psmc {

// Deterministic generator used by the simulation harness.  Pure 64-bit
// integer arithmetic, so streams are bit-identical across platforms.
inline constexpr const char* kRngName = "splitmix64-v1";

class SplitMix64 {
 public:
  explicit SplitMix64(uint64_t seed) : state_(seed) {}

  uint64_t next() {
    state_ += 0x9e3779b97f4a7c15ULL;
    uint64_t z = state_;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // uniform in [0, bound), bound >= 1; rejection keeps it exactly uniform
  uint64_t below(uint64_t bound) {
    uint64_t threshold = (0 - bound) % bound;
    for (;;) {
      uint64_t r = next();
      if (r >= threshold) return r % bound;
    }
  }

 private:
  uint64_t state_;
};

// per-trial stream seed: hash of (seed, index)
inline uint64_t derive_stream_seed(uint64_t seed, uint64_t index) {
  SplitMix64 g(seed);
  uint64_t h = g.next();
  SplitMix64 g2(h ^ (index * 0x9e3779b97f4a7c15ULL + 0xd1b54a32d192ed03ULL));
  return g2.next();
}

}  // namespace psmc
