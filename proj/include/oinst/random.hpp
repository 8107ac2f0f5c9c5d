#pragma once

#include <oinst/rational.hpp>

#include <cstdint>
#include <random>
#include <vector>

namespace oinst {

/// Seeded generator for every randomized routine. Child streams are derived
/// from (seed, index) so results never depend on call interleaving.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(mix(seed)) {}
  Rng(std::uint64_t seed, std::uint64_t stream) : eng_(mix(seed ^ mix(stream + 0x9e3779b97f4a7c15ULL))) {}

  long uniform(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(eng_); }

  std::vector<Rat> point(std::size_t len, long box) {
    std::vector<Rat> p;
    p.reserve(len);
    for (std::size_t i = 0; i < len; ++i) p.emplace_back(uniform(-box, box));
    return p;
  }

  std::vector<Rat> nonzero_point(std::size_t len, long box) {
    for (;;) {
      auto p = point(len, box);
      for (const auto& x : p)
        if (!x.is_zero()) return p;
    }
  }

 private:
  // splitmix64 finalizer
  static std::uint64_t mix(std::uint64_t z) {
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  std::mt19937_64 eng_;
};

}  // namespace oinst
