#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "packdom/vertex_set.hpp"

namespace packdom {

/// Seeded pseudo-random source used everywhere randomness is needed.
///
/// The engine is std::mt19937_64, whose output sequence is fixed by the
/// standard. Bounded draws use rejection sampling on the raw 64-bit output
/// rather than std::uniform_int_distribution, whose algorithm differs between
/// standard libraries; this keeps every seeded result identical across
/// toolchains.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }

  /// Uniform in [0, bound). bound must be positive.
  std::uint64_t below(std::uint64_t bound);

  template <typename T>
  void shuffle(std::vector<T>& items) {
    for (std::size_t i = items.size(); i > 1; --i) {
      std::swap(items[i - 1], items[below(i)]);
    }
  }

 private:
  std::mt19937_64 engine_;
};

/// Scan order used by the greedy constructions: seed 0 is the identity
/// order 0, 1, ..., n-1; any other seed gives a Fisher-Yates shuffle of it.
std::vector<Vertex> scan_order(std::size_t n, std::uint64_t seed);

}  // namespace packdom
