#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "packdom/vertex_set.hpp"

namespace packdom {

using Edge = std::pair<Vertex, Vertex>;

/// Simple undirected graph on vertices 0..n-1 with sorted adjacency lists.
class Graph {
 public:
  Graph() = default;
  explicit Graph(std::size_t n) : adj_(n) {}
  Graph(std::size_t n, std::span<const Edge> edges);
  Graph(std::size_t n, std::initializer_list<Edge> edges)
      : Graph(n, std::span<const Edge>(edges.begin(), edges.size())) {}

  /// Throws InvalidInput on loops, duplicates, or out-of-range endpoints.
  void add_edge(Vertex u, Vertex v);

  std::size_t order() const noexcept { return adj_.size(); }
  std::size_t size() const noexcept { return m_; }

  std::span<const Vertex> neighbors(Vertex v) const { return adj_.at(v); }
  std::size_t degree(Vertex v) const { return adj_.at(v).size(); }
  bool adjacent(Vertex u, Vertex v) const;

  std::size_t max_degree() const noexcept;
  std::size_t min_degree() const noexcept;

  /// Edges as (u, v) with u < v, lexicographically sorted.
  std::vector<Edge> edges() const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  std::vector<std::vector<Vertex>> adj_;
  std::size_t m_ = 0;
};

/// Shortest-path length; std::nullopt encodes "no path" (infinite distance).
using Distance = std::optional<std::size_t>;

Distance distance(const Graph& g, Vertex u, Vertex v);
std::vector<Distance> bfs_distances(const Graph& g, Vertex source);

/// Connected components, each sorted, ordered by smallest member.
std::vector<std::vector<Vertex>> components(const Graph& g);
bool is_connected(const Graph& g);

/// N(v) and N[v]; the set-valued forms take unions over the set.
VertexSet open_neighborhood(const Graph& g, Vertex v);
VertexSet closed_neighborhood(const Graph& g, Vertex v);
VertexSet open_neighborhood(const Graph& g, const VertexSet& s);
VertexSet closed_neighborhood(const Graph& g, const VertexSet& s);

struct InducedSubgraph {
  Graph graph;
  /// to_parent[new] = old.
  std::vector<Vertex> to_parent;
  /// from_parent[old] = new, or std::nullopt when old is not in the subset.
  std::vector<std::optional<Vertex>> from_parent;
};

InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& s);

/// Relabels vertex v as perm[v].
Graph relabel(const Graph& g, std::span<const Vertex> perm);

/// Disjoint union; vertices of b are shifted by a.order().
Graph disjoint_union(const Graph& a, const Graph& b);

/// Component structure of a graph with maximum degree at most two.
struct DegreeTwoDecomposition {
  /// Each cycle starts at its smallest vertex and continues towards the
  /// smaller of that vertex's two neighbours.
  std::vector<std::vector<Vertex>> cycles;
  /// Each path (at least one edge) starts at its smaller endpoint.
  std::vector<std::vector<Vertex>> paths;
  VertexSet isolated;
};

/// Throws InvalidInput if some vertex has degree three or more.
DegreeTwoDecomposition decompose_max_degree_two(const Graph& h);

}  // namespace packdom
