#pragma once

#include <cstdint>
#include <random>
#include <vector>

namespace stump {

// Seeded pseudo-random source. All randomness in the project flows through
// this wrapper; std::*_distribution is avoided on purpose because its output
// is implementation-defined, which would break byte-identical reproducibility
// across toolchains.
class Rng {
public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next_u64() { return engine_(); }

  // Uniform integer in [0, n). n must be > 0. Modulo bias is negligible for
  // the bounds used here (all far below 2^32).
  std::uint64_t next_below(std::uint64_t n) { return engine_() % n; }

  // Uniform double in [0, 1) with 53 random bits.
  double next_unit() {
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
  }

  bool next_bernoulli(double p) { return next_unit() < p; }

  // In-place Fisher-Yates shuffle.
  template <typename T>
  void shuffle(std::vector<T>& v) {
    for (std::size_t i = v.size(); i > 1; --i) {
      std::size_t j = static_cast<std::size_t>(next_below(i));
      std::swap(v[i - 1], v[j]);
    }
  }

private:
  std::mt19937_64 engine_;
};

}  // namespace stump
