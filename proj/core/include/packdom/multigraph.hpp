#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "packdom/vertex_set.hpp"

namespace packdom {

using EdgeId = std::uint32_t;

/// Undirected multigraph. Parallel edges and loops are allowed; every edge
/// has a dense id and an opaque provenance tag set by whoever built it.
class Multigraph {
 public:
  struct Edge {
    EdgeId id;
    Vertex u;
    Vertex v;
    std::int64_t tag;

    bool is_loop() const noexcept { return u == v; }
    Vertex other(Vertex x) const noexcept { return x == u ? v : u; }
    friend bool operator==(const Edge&, const Edge&) = default;
  };

  Multigraph() = default;
  explicit Multigraph(std::size_t n) : incidence_(n) {}

  EdgeId add_edge(Vertex u, Vertex v, std::int64_t tag = -1);

  std::size_t order() const noexcept { return incidence_.size(); }
  std::size_t size() const noexcept { return edges_.size(); }

  const Edge& edge(EdgeId e) const { return edges_.at(e); }
  std::span<const Edge> edges() const noexcept { return edges_; }

  /// Ids of edges incident with v, ascending. A loop is listed once.
  std::span<const EdgeId> incident(Vertex v) const { return incidence_.at(v); }

  /// Edge slots at v: a loop counts twice.
  std::size_t degree(Vertex v) const;
  std::size_t min_degree() const;
  std::size_t max_degree() const;

  /// Sorted list of (min, max) endpoint pairs, one entry per edge.
  std::vector<std::pair<Vertex, Vertex>> edge_multiset() const;

  friend bool operator==(const Multigraph&, const Multigraph&) = default;

 private:
  std::vector<Edge> edges_;
  std::vector<std::vector<EdgeId>> incidence_;
};

std::vector<std::vector<Vertex>> components(const Multigraph& m);
bool is_connected(const Multigraph& m);

}  // namespace packdom
