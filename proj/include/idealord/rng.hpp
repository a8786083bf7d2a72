#ifndef IDEALORD_RNG_HPP
#define IDEALORD_RNG_HPP

#include <cstdint>

namespace idealord {

// SplitMix64: deterministic, splittable 64-bit generator used for all
// sampled suites so that identical seeds give identical reports.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // Uniform in [0, bound); bound > 0. Modulo bias is irrelevant at the
  // bounds used here (all far below 2^32).
  std::uint64_t below(std::uint64_t bound) { return next() % bound; }

  // Independent child stream for a named sub-suite.
  SplitMix64 split() { return SplitMix64(next() ^ 0x6a09e667f3bcc909ULL); }

 private:
  std::uint64_t state_;
};

}  // namespace idealord

#endif
