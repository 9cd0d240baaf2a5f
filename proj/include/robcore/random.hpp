#pragma once

#include <cstdint>
#include <random>
#include <span>
#include <utility>

namespace robcore {

/// SplitMix64 finalizer. Used to derive independent per-trial seeds.
std::uint64_t mix64(std::uint64_t x);

/// Seed of trial `index` under master seed `master`:
/// mix64(master ^ mix64(index + 0x9E3779B97F4A7C15)).
std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index);

/// Seeded generator with hand-rolled distributions so that draws are
/// identical across standard-library implementations.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }
  /// Uniform in [0, 1) with 53 random bits.
  double uniform01();
  /// Uniform in [0, bound). bound must be positive.
  std::uint64_t below(std::uint64_t bound);
  /// Uniform in [lo, hi].
  std::int64_t between(std::int64_t lo, std::int64_t hi);

  template <typename T>
  void shuffle(std::span<T> values) {
    for (std::size_t i = values.size(); i > 1; --i) {
      std::swap(values[i - 1], values[below(i)]);
    }
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace robcore
