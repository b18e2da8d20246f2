#pragma once

#include <cstdint>
#include <string_view>

namespace sqm {

// All randomness in the library flows through SplitMix64 so that every
// experiment is reproducible from a 64-bit seed alone.  The generator and
// the substream derivation below are part of the file-format contract:
// a (seed, draw index) pair always yields the same stream.
class SplitMix64 {
 public:
  explicit constexpr SplitMix64(std::uint64_t seed) : state_(seed) {}

  constexpr std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // Uniform in [0, 1).
  double next_unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  bool bernoulli(double p) { return next_unit() < p; }

  // Uniform in [0, bound) without modulo bias.
  std::uint64_t below(std::uint64_t bound) {
    const std::uint64_t threshold = (0 - bound) % bound;
    for (;;) {
      const std::uint64_t r = next();
      if (r >= threshold) return r % bound;
    }
  }

 private:
  std::uint64_t state_;
};

// SplitMix64 finalizer applied to a single word.
constexpr std::uint64_t mix64(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

// Substream seed for (seed, index); used for per-draw and per-trial streams.
constexpr std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index) {
  return mix64(seed ^ mix64(index + 0x9e3779b97f4a7c15ULL));
}

// Incremental seed accumulator for composite keys such as
// (master seed, n, density string, trial index).
class SeedChain {
 public:
  explicit constexpr SeedChain(std::uint64_t master) : h_(mix64(master)) {}

  constexpr SeedChain& fold(std::uint64_t v) {
    h_ = mix64(h_ ^ v);
    return *this;
  }

  constexpr SeedChain& fold(std::string_view s) {
    for (const char c : s) h_ = mix64(h_ ^ static_cast<unsigned char>(c));
    return *this;
  }

  constexpr std::uint64_t value() const { return h_; }

 private:
  std::uint64_t h_;
};

}  // namespace sqm
