#pragma once

#include <cstdint>

namespace tsim {

// pcg32 (Melissa O'Neill, pcg-random.org, minimal variant). We carry our own
// generator instead of std::mt19937 so that byte-for-byte reproducibility of
// checkpoints and logs does not depend on the standard library's
// distribution implementations.
class Rng {
 public:
  Rng() : Rng(0x853c49e6748fea9bULL) {}
  explicit Rng(uint64_t seed) { reseed(seed); }

  void reseed(uint64_t seed) {
    state_ = 0;
    inc_ = (seed << 1u) | 1u;
    next_u32();
    state_ += 0x853c49e6748fea9bULL + seed;
    next_u32();
  }

  uint32_t next_u32() {
    uint64_t old = state_;
    state_ = old * 6364136223846793005ULL + inc_;
    uint32_t xorshifted = static_cast<uint32_t>(((old >> 18u) ^ old) >> 27u);
    uint32_t rot = static_cast<uint32_t>(old >> 59u);
    return (xorshifted >> rot) | (xorshifted << ((-rot) & 31u));
  }

  uint64_t next_u64() {
    uint64_t hi = next_u32();
    return (hi << 32) | next_u32();
  }

  // unbiased integer in [0, bound) via rejection
  uint32_t below(uint32_t bound) {
    uint32_t threshold = (-bound) % bound;
    for (;;) {
      uint32_t r = next_u32();
      if (r >= threshold) return r % bound;
    }
  }

  int range(int lo, int hi_inclusive) {
    return lo + static_cast<int>(below(static_cast<uint32_t>(hi_inclusive - lo + 1)));
  }

  // double in [0, 1) with 53 random bits
  double uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  float uniformf(float lo, float hi) { return static_cast<float>(uniform(lo, hi)); }

  // derive an independent stream; used to give each subsystem its own rng
  Rng split(uint64_t stream_tag) {
    uint64_t s = next_u64();
    return Rng(s ^ (stream_tag * 0x9e3779b97f4a7c15ULL));
  }

  uint64_t state_bits() const { return state_ ^ inc_; }

 private:
  uint64_t state_ = 0;
  uint64_t inc_ = 0;
};

}  // namespace tsim
