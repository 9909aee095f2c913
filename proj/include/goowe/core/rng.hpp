// Copyright 2026 The goowe Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <random>

namespace goowe {

/// Seeded 64-bit generator with portable derived draws.
///
/// The engine is std::mt19937_64, whose output sequence is fixed by the
/// standard. Distribution transforms are implemented here rather than taken
/// from <random>, whose algorithms are implementation-defined, so a seed
/// yields the same stream on every platform:
///   uniform()   53 high bits scaled to [0, 1)
///   below(n)    rejection sampling, unbiased
///   gaussian()  Marsaglia polar method, spare value cached
///   split()     child generator seeded by SplitMix64 of the next draw
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next_u64() { return engine_(); }
  double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
  std::uint64_t below(std::uint64_t n);
  bool bernoulli(double p) { return uniform() < p; }
  double gaussian();
  Rng split();

 private:
  std::mt19937_64 engine_;
  bool has_spare_ = false;
  double spare_ = 0.0;
};

std::uint64_t splitmix64(std::uint64_t x) noexcept;

}  // namespace goowe
