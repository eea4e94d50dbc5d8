#include "packdom/random.hpp"

#include <numeric>

namespace packdom {

std::uint64_t Rng::below(std::uint64_t bound) {
  // Reject the low (2^64 mod bound) outputs so the remainder is unbiased.
  const std::uint64_t threshold = (0 - bound) % bound;
  for (;;) {
    std::uint64_t r = next();
    if (r >= threshold) return r % bound;
  }
}

std::vector<Vertex> scan_order(std::size_t n, std::uint64_t seed) {
  std::vector<Vertex> order(n);
  std::iota(order.begin(), order.end(), Vertex{0});
  if (seed != 0) {
    Rng rng(seed);
    rng.shuffle(order);
  }
  return order;
}

}  // namespace packdom
