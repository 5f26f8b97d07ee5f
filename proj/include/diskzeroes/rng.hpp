#pragma once

#include <cstdint>

namespace dz {

namespace detail {
// SplitMix64 finalizer (Steele/Lea/Flood; Vigna's fixed-increment variant).
inline uint64_t mix64(uint64_t z) {
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}
}  // namespace detail

// Counter-based splittable generator. A stream is keyed by (seed, stream id);
// draw i of a stream is a pure function of (key, i), so per-walk streams are
// independent of scheduling and may be replayed or indexed at random.
class SplitRng {
 public:
  SplitRng(uint64_t seed, uint64_t stream)
      : key_(detail::mix64(detail::mix64(seed + 0x9E3779B97F4A7C15ull) ^
                           detail::mix64(stream * 0xD2B74407B1CE6E93ull +
                                         0xCA5A826395121157ull))) {}

  uint64_t at(uint64_t i) const {
    return detail::mix64(key_ + i * 0x9E3779B97F4A7C15ull);
  }

  uint64_t next() { return at(counter_++); }

  // uniform in [0, 1), 53-bit resolution
  double uniform() { return (next() >> 11) * 0x1.0p-53; }

  uint64_t key() const { return key_; }

 private:
  uint64_t key_;
  uint64_t counter_ = 0;
};

// Stable 64-bit combine for deriving sub-seeds from a base seed and tags.
inline uint64_t derive_seed(uint64_t seed, uint64_t tag_a, uint64_t tag_b = 0) {
  return detail::mix64(detail::mix64(seed ^ 0x6A09E667F3BCC909ull) +
                       detail::mix64(tag_a) + 3 * detail::mix64(tag_b + 1));
}

}  // namespace dz
