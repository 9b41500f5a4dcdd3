#pragma once

#include <cstdint>
#include <string_view>

namespace parkfn {

// splitmix64: the k-th output is mix(seed + k*gamma), so the generator is
// effectively counter based and substreams can be derived by remixing the
// seed with a stream index. Identical seed => identical sample stream.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : seed_(seed), state_(seed) {}

  static constexpr std::string_view algorithm() { return "splitmix64"; }

  std::uint64_t seed() const { return seed_; }

  std::uint64_t next() {
    std::uint64_t z = (state_ += kGamma);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // Uniform on [0, bound); rejection from the top keeps the draw exact.
  std::uint64_t next_below(std::uint64_t bound) {
    std::uint64_t threshold = (-bound) % bound;
    for (;;) {
      std::uint64_t r = next();
      if (r >= threshold) return r % bound;
    }
  }

  // Uniform on [1, hi].
  int next_in_range(int hi) {
    return static_cast<int>(next_below(static_cast<std::uint64_t>(hi))) + 1;
  }

  double next_double() {  // [0, 1)
    return static_cast<double>(next() >> 11) * 0x1.0p-53;
  }

  // Independent substream for parallel sampling: seed' = mix(seed, index).
  SplitMix64 substream(std::uint64_t stream) const {
    std::uint64_t z = seed_ + (stream + 1) * kGamma;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return SplitMix64(z ^ (z >> 31));
  }

 private:
  static constexpr std::uint64_t kGamma = 0x9e3779b97f4a7c15ULL;

  std::uint64_t seed_;
  std::uint64_t state_;
};

}  // namespace parkfn
