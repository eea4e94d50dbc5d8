#pragma once

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "packdom/multigraph.hpp"
#include "packdom/vertex_set.hpp"

namespace packdom {

/// Direction assignment on the edges of a multigraph. An edge stored as
/// (u, v) is the arc u -> v when forward, v -> u otherwise.
class Orientation {
 public:
  Orientation() = default;
  Orientation(Multigraph base, std::vector<bool> forward);

  const Multigraph& base() const noexcept { return base_; }
  bool forward(EdgeId e) const { return forward_.at(e); }

  Vertex tail(EdgeId e) const;
  Vertex head(EdgeId e) const;

  void reverse(EdgeId e) { forward_.at(e) = !forward_.at(e); }

  /// A loop contributes one to each.
  std::size_t in_degree(Vertex v) const;
  std::size_t out_degree(Vertex v) const;

  /// (tail, head) per edge id.
  std::vector<std::pair<Vertex, Vertex>> arcs() const;

  friend bool operator==(const Orientation&, const Orientation&) = default;

 private:
  Multigraph base_;
  std::vector<bool> forward_;
};

/// One application of the path-reversal step: `reversed_path` was a
/// directed path from `source` to `target` before the step.
struct SourceEliminationStep {
  Vertex source;
  Vertex target;
  std::vector<EdgeId> reversed_path;
};

/// Vertices reachable from `origin` by a directed walk with at least one arc.
/// `origin` itself is a member only when it lies on a directed closed walk.
struct ReachSet {
  Vertex origin;
  VertexSet members;
};

/// Every edge points from its smaller stored endpoint to its larger one;
/// loops are stored forward.
Orientation orient_arbitrary(const Multigraph& m);

VertexSet sources(const Orientation& d);

ReachSet reach_plus(const Orientation& d, Vertex v);

/// Reverses a breadth-first directed path from the source `v` to the first
/// reachable vertex of in-degree at least two (smallest index within the
/// first breadth-first layer that has one). Afterwards neither endpoint is a
/// source and every other vertex keeps its in- and out-degree.
/// Throws InvalidInput if `v` is not a source or its component has a vertex
/// of degree below two, and ConsistencyError if no target exists.
std::pair<Orientation, SourceEliminationStep> eliminate_source(
    const Orientation& d, Vertex v);

struct SourceFreeOrientation {
  Orientation orientation;
  std::vector<SourceEliminationStep> steps;
};

/// Starts from orient_arbitrary and eliminates the smallest source until none
/// is left. Requires every vertex to have degree at least two (loops count
/// twice); throws InvalidInput otherwise.
SourceFreeOrientation orient_no_sources(const Multigraph& m);

}  // namespace packdom
