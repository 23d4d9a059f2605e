#pragma once

#include <cstdint>
#include <random>

namespace signsearch {

// Seeded random stream. Identical seeds produce identical streams on any
// platform: mt19937_64 output is fully specified by the standard and the
// [0,1) mapping below avoids std::uniform_real_distribution, whose results
// are implementation-defined.
class RandomSource {
 public:
  explicit RandomSource(std::uint64_t seed) : seed_(seed), gen_(seed) {}

  std::uint64_t seed() const { return seed_; }

  std::uint64_t next_u64() { return gen_(); }

  // Uniform in [0, 1) with 53 random mantissa bits.
  double next_double() { return static_cast<double>(gen_() >> 11) * 0x1.0p-53; }

  // Uniform in [0, bound). bound > 0. Rejection-free modulo is fine here:
  // bounds in this project are tiny against 2^64, so the bias is < 2^-40.
  std::uint64_t next_below(std::uint64_t bound) { return gen_() % bound; }

  // Child stream for an independent component. Streams derived from the
  // same seed with distinct tags are decorrelated via splitmix64; the
  // derivation is pure, so derive(tag) never perturbs this stream.
  RandomSource derive(std::uint64_t tag) const {
    return RandomSource(splitmix64(seed_ ^ splitmix64(tag ^ 0x9e3779b97f4a7c15ull)));
  }

  static std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ull;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
    return x ^ (x >> 31);
  }

 private:
  std::uint64_t seed_;
  std::mt19937_64 gen_;
};

}  // namespace signsearch
