#pragma once

#include <cstdint>
#include <random>

namespace pire {

/// mt19937_64 with hand-rolled draws; std distributions are not portable
/// across standard libraries and outputs must be reproducible from a seed.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }
  /// Uniform in [0, n); n > 0.
  std::size_t index(std::size_t n) { return static_cast<std::size_t>(engine_() % n); }
  /// Uniform in [0, 1).
  double unit() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
  bool chance(double p) { return unit() < p; }

  template <class It>
  void shuffle(It first, It last) {
    for (auto n = last - first; n > 1; --n) std::swap(first[n - 1], first[index(n)]);
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace pire
