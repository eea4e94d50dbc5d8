#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "packdom/graph.hpp"
#include "packdom/multigraph.hpp"

namespace packdom {

/// h1, h2 / wagner, h3 / petersen, k33, and the families c<n> / cycle<n>,
/// p<n> / path<n>. Throws InvalidInput for anything else.
Graph named(std::string_view name);

Graph cycle_graph(std::size_t n);
Graph path_graph(std::size_t n);
Graph complete_bipartite(std::size_t a, std::size_t b);

/// Names of the four graphs attaining i = 3 rho in the catalog.
const std::vector<std::string>& tight_catalog();

/// Catalog name of a graph isomorphic to g, if any.
std::optional<std::string> identify(const Graph& g);

/// Connected graph with maximum degree at most `max_degree`: a random
/// spanning tree respecting the cap, then up to n random extra edges that
/// keep the cap. Deterministic in (n, max_degree, seed).
Graph random_connected_bounded_degree(std::size_t n, std::size_t max_degree,
                                      std::uint64_t seed);

inline Graph random_subcubic(std::size_t n, std::uint64_t seed) {
  return random_connected_bounded_degree(n, 3, seed);
}

/// Largest n accepted by enumerate_connected_subcubic.
inline constexpr std::size_t kMaxEnumerationOrder = 10;

/// All connected graphs on n vertices with maximum degree at most three, one
/// per isomorphism class, sorted by canonical code.
std::vector<Graph> enumerate_connected_subcubic(std::size_t n);

/// Connected multigraph with minimum degree at least two: a random
/// Hamiltonian cycle (a loop for n = 1, a double edge for n = 2) plus m - n
/// uniformly random extra edges, loops allowed.
Multigraph random_multigraph_min2(std::size_t n, std::size_t m,
                                  std::uint64_t seed);

/// Every labelled connected multigraph on n vertices with exactly m edges and
/// minimum degree at least two, as an edge multiset in lexicographic order.
/// Stops early when `visit` returns false.
void for_each_multigraph_min2(std::size_t n, std::size_t m,
                              const std::function<bool(const Multigraph&)>& visit);

}  // namespace packdom
