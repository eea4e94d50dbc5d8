#pragma once

#include <cstddef>
#include <optional>
#include <vector>

namespace packdom {

/// Maximum-cardinality matching in a bipartite graph (Hopcroft-Karp).
/// Left vertices 0..left-1, right vertices 0..right-1.
class BipartiteMatcher {
 public:
  BipartiteMatcher(std::size_t left, std::size_t right);

  void add_edge(std::size_t l, std::size_t r);

  /// Runs the algorithm and returns the matching size.
  std::size_t solve();

  std::optional<std::size_t> mate_of_left(std::size_t l) const;
  std::optional<std::size_t> mate_of_right(std::size_t r) const;

 private:
  bool layer();
  bool augment(std::size_t l);

  std::size_t right_count_;
  std::vector<std::vector<std::size_t>> adj_;
  std::vector<std::size_t> mate_left_;
  std::vector<std::size_t> mate_right_;
  std::vector<std::size_t> level_;
};

}  // namespace packdom
