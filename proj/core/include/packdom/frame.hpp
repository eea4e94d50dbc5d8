#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "packdom/graph.hpp"
#include "packdom/multigraph.hpp"
#include "packdom/vertex_set.hpp"

namespace packdom {

/// The partition of a connected subcubic graph induced by a maximal packing
/// S: the neighbourhood N = N(S), the rest R = V \ N[S], and the structure of
/// H = G[N]. All vertex ids are ids of the graph the frame was built from.
struct Frame {
  VertexSet packing;
  VertexSet neighborhood;
  VertexSet rest;
  /// packing_neighbor[x] is the unique packing vertex adjacent to x, for
  /// x in the neighbourhood.
  std::vector<std::optional<Vertex>> packing_neighbor;

  InducedSubgraph h;
  std::vector<std::vector<Vertex>> cycles;
  /// Components of H that are paths with at least two edges.
  std::vector<std::vector<Vertex>> long_paths;
  VertexSet isolated;

  /// The single-edge components of H, each stored as (smaller, larger).
  std::vector<Edge> matching;
  VertexSet matched;
  /// partner[x] is the other endpoint of x's matching edge, for x matched.
  std::vector<std::optional<Vertex>> partner;
  /// matching_index[x] indexes `matching`, for x matched.
  std::vector<std::optional<std::size_t>> matching_index;
};

/// Requires g connected with at least two vertices, maximum degree at most
/// three, and s a maximal packing; throws InvalidInput otherwise. Throws
/// ConsistencyError if a structural fact about the frame fails to hold.
Frame build_frame(const Graph& g, const VertexSet& s);

/// Candidate set A within the neighbourhood, together with the packing
/// vertices X(A) whose three neighbours are all matched and none chosen.
struct ASet {
  VertexSet members;
  VertexSet x;

  friend bool operator==(const ASet&, const ASet&) = default;
};

/// X(B): packing vertices of degree three with N(s) inside (N \ B) cap W.
VertexSet x_of(const Graph& g, const Frame& frame, const VertexSet& b);

ASet make_aset(const Graph& g, const Frame& frame, VertexSet members);

/// A contains both endpoints of every path of H with at least two edges.
bool satisfies_endpoint_condition(const Frame& frame, const VertexSet& a);
/// A is a maximal independent set of H.
bool satisfies_maximality_condition(const Graph& g, const Frame& frame,
                                    const VertexSet& a);

/// Forced vertices (long-path endpoints, isolated vertices of H) followed by
/// a lowest-index-first greedy completion to a maximal independent set of H.
ASet initial_a(const Graph& g, const Frame& frame);

/// Which matching endpoint sits next to which endpoint of a Q edge:
/// near_u is adjacent to the Q edge's stored u, near_v to its stored v.
struct QWitness {
  std::size_t matching_edge;
  Vertex near_u;
  Vertex near_v;
};

/// Multigraph Q on X(N \ W). Q vertex i is graph vertex q_vertices[i].
struct QFrame {
  std::vector<Vertex> q_vertices;
  std::vector<std::optional<Vertex>> q_index;
  Multigraph q;
  /// Indexed by Q edge id; the edge's tag is the matching_edge index too.
  std::vector<QWitness> witness;
  /// Q vertices (as Q indices) in components that meet X(A).
  VertexSet q_prime;
};

QFrame build_q(const Graph& g, const Frame& frame, const ASet& a);

}  // namespace packdom
