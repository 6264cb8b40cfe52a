// Copyright 2026 the barter developers. Licensed under the Apache License,
// Version 2.0. See the LICENSE file at the root of this distribution or at
// http://www.apache.org/licenses/LICENSE-2.0

#pragma once

#include <cstdint>
#include <random>

namespace barter {

// splitmix64 finalizer. Used both to stretch user seeds into well-mixed
// engine seeds and to combine (seed, round, phase, agent) into per-agent
// sub-stream seeds.
constexpr std::uint64_t mix64(std::uint64_t x) noexcept {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

constexpr std::uint64_t derive_seed(std::uint64_t root, std::uint64_t a,
                                    std::uint64_t b = 0, std::uint64_t c = 0) noexcept {
  std::uint64_t h = mix64(root);
  h = mix64(h ^ a);
  h = mix64(h ^ b);
  h = mix64(h ^ c);
  return h;
}

// Deterministic random stream. mt19937_64 output is pinned by the standard;
// the std::uniform_* distributions are not, so the bounded mappings here are
// spelled out by hand to keep results byte-identical across toolchains.
class SubStream {
 public:
  explicit SubStream(std::uint64_t seed) : gen_(seed) {}

  // Uniform integer in [0, n). n must be >= 1.
  std::size_t uniform_index(std::size_t n) {
    const std::uint64_t bound = static_cast<std::uint64_t>(n);
    const std::uint64_t threshold = (0 - bound) % bound;  // 2^64 mod n
    for (;;) {
      const std::uint64_t r = gen_();
      if (r >= threshold) return static_cast<std::size_t>(r % bound);
    }
  }

  // Uniform double in [0, 1) with 53 random mantissa bits.
  double uniform_unit() { return static_cast<double>(gen_() >> 11) * 0x1.0p-53; }

  double uniform_in(double lo, double hi) { return lo + (hi - lo) * uniform_unit(); }

 private:
  std::mt19937_64 gen_;
};

}  // namespace barter
