#pragma once

#include <cstdint>
#include <vector>

#include "packdom/graph.hpp"

namespace packdom {

/// Largest order accepted by the canonical-form routines (the code is the
/// upper triangle of the adjacency matrix packed into 64 bits).
inline constexpr std::size_t kMaxCanonicalOrder = 11;

/// Isomorphism-invariant code with the vertex count: two graphs of equal
/// order are isomorphic iff their codes are equal. Computed as the maximum
/// adjacency code over the leaves of an individualisation-refinement tree.
struct CanonicalForm {
  std::size_t order = 0;
  std::uint64_t code = 0;

  friend auto operator<=>(const CanonicalForm&, const CanonicalForm&) = default;
};

CanonicalForm canonical_form(const Graph& g);

/// Graph with vertices relabelled into canonical order.
Graph canonical_graph(const Graph& g);

bool isomorphic(const Graph& a, const Graph& b);

}  // namespace packdom
