#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "packdom/graph.hpp"
#include "packdom/vertex_set.hpp"

namespace packdom {

// Validators ----------------------------------------------------------------

/// Pairwise distance at least three. Checked both via distances and via
/// disjointness of closed neighbourhoods; a disagreement is a
/// ConsistencyError.
bool is_packing(const Graph& g, const VertexSet& s);

/// Throws InvalidInput when `s` is not a packing in the first place.
bool is_maximal_packing(const Graph& g, const VertexSet& s);

bool is_independent(const Graph& g, const VertexSet& s);
bool is_dominating(const Graph& g, const VertexSet& s);
bool is_independent_dominating(const Graph& g, const VertexSet& s);

// Greedy constructions --------------------------------------------------------

VertexSet greedy_maximal_packing(const Graph& g, std::span<const Vertex> order);
VertexSet greedy_maximal_packing(const Graph& g, std::uint64_t seed);

VertexSet greedy_maximal_independent_set(const Graph& g,
                                         std::span<const Vertex> order);
VertexSet greedy_maximal_independent_set(const Graph& g, std::uint64_t seed);

// Exact oracles ---------------------------------------------------------------

struct OracleLimits {
  /// Hard cap on the vertex count of an exhaustive search. Bitmask searches
  /// support at most 64.
  std::size_t max_vertices = 20;
};

/// Calls `visit` on every maximal packing in lexicographic order of the
/// sorted member lists. Stops early when `visit` returns false.
void for_each_maximal_packing(const Graph& g,
                              const std::function<bool(const VertexSet&)>& visit,
                              OracleLimits limits = {});

std::vector<VertexSet> enumerate_maximal_packings(const Graph& g,
                                                  std::size_t limit,
                                                  OracleLimits limits = {});

/// Optimal witnesses; each is the lexicographically least set of optimal size.
VertexSet maximum_packing(const Graph& g, OracleLimits limits = {});
VertexSet minimum_independent_dominating_set(const Graph& g,
                                             OracleLimits limits = {});
VertexSet minimum_dominating_set(const Graph& g, OracleLimits limits = {});

/// rho(G), i(G), gamma(G).
std::size_t packing_number_bruteforce(const Graph& g, OracleLimits limits = {});
std::size_t idom_number_bruteforce(const Graph& g, OracleLimits limits = {});
std::size_t dom_number_bruteforce(const Graph& g, OracleLimits limits = {});

}  // namespace packdom
