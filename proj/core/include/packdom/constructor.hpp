#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "packdom/frame.hpp"
#include "packdom/graph.hpp"
#include "packdom/orientation.hpp"
#include "packdom/vertex_set.hpp"

namespace packdom {

struct InitialStep {
  friend bool operator==(const InitialStep&, const InitialStep&) = default;
};

/// Swap along a shortest Q-path from `v` to the nearest `w` in X(A): the
/// matched neighbour `u2` of v enters and its partner `v2` leaves; along the
/// path each x_i leaves and y_i enters.
struct PathSwapStep {
  Vertex v;
  Vertex w;
  /// Packing vertices w_1 = v, ..., w_k = w.
  std::vector<Vertex> q_path;
  /// (x_i, y_i) with x_i adjacent to w_i and y_i adjacent to w_{i+1}.
  std::vector<Edge> swapped;
  Vertex u2;
  Vertex v2;
  friend bool operator==(const PathSwapStep&, const PathSwapStep&) = default;
};

/// Flip driven by a source-free orientation of Q'. For every arc (p, q) the
/// matching endpoint next to p leaves A and the one next to q enters.
struct OrientationFlipStep {
  /// Arcs between packing vertices, one per Q' edge.
  std::vector<Edge> arcs;
  /// (removed, inserted) per arc; removal of a non-member is a no-op.
  std::vector<Edge> flips;
  std::size_t eliminations = 0;
  std::size_t loops = 0;
  friend bool operator==(const OrientationFlipStep&,
                         const OrientationFlipStep&) = default;
};

using StepDescriptor = std::variant<InitialStep, PathSwapStep, OrientationFlipStep>;

struct AHistoryEntry {
  ASet a;
  StepDescriptor step;
};

enum class InjectionTarget { neighborhood, s1, s2 };

struct InjectionEntry {
  Vertex from;
  InjectionTarget part;
  Vertex to;
};

/// The map from A-hat into N + S1 + S2 certifying |A-hat| <= |N| + |S1| + |S2|.
struct SizeInjection {
  std::vector<InjectionEntry> entries;
  bool injective = false;
  /// Z or S3 vertices left without a distinct target by the matching.
  std::vector<Vertex> unmatched;
};

/// Sizes behind the counting argument. "Over S'" restricts S_i to the
/// undominated packing vertices; "over S" counts all packing vertices.
struct SizeAccounting {
  std::size_t a = 0;
  std::size_t s_prime = 0;
  std::size_t z = 0;
  std::size_t a_hat = 0;
  std::size_t neighborhood = 0;
  std::size_t packing = 0;
  std::size_t bound = 0;
  std::size_t s_prime_by_degree[4] = {0, 0, 0, 0};
  std::size_t packing_by_degree[4] = {0, 0, 0, 0};
};

/// Full record of one component's construction, in the component's local
/// vertex ids; component[i] is the id of local vertex i in the input graph.
struct ConstructionTrace {
  std::vector<Vertex> component;
  /// Absent for a single-vertex component.
  std::optional<Frame> frame;
  std::vector<AHistoryEntry> a_history;
  VertexSet s_prime;
  VertexSet t;
  VertexSet z;
  VertexSet a_hat;
  SizeInjection injection;
  SizeAccounting sizes;
  std::vector<std::string> anomalies;
};

struct PathSwapResult {
  ASet a;
  PathSwapStep step;
};

/// `v` is a graph vertex in Q' with Q'-degree at most two.
PathSwapResult path_swap(const Graph& g, const Frame& frame, const ASet& a,
                         const QFrame& qf, Vertex v);

struct OrientationFlipResult {
  ASet a;
  OrientationFlipStep step;
};

/// Requires every Q' vertex to have degree exactly three.
OrientationFlipResult orientation_flip(const Graph& g, const Frame& frame,
                                       const ASet& a, const QFrame& qf);

struct MinimizeResult {
  ASet a;
  std::vector<AHistoryEntry> steps;
};

/// Improvement loop: while X(A) is nonempty, path-swap at the smallest Q'
/// vertex of degree at most two, or flip along a source-free orientation
/// when Q' is cubic.
MinimizeResult minimize_x(const Graph& g, const Frame& frame, const ASet& a);

/// Adds S' and a greedy independent dominating set Z of G[T] to the last A in
/// `history`, then checks the result and the 3|S| bound.
ConstructionTrace finalize(const Graph& g, const Frame& frame,
                           std::vector<AHistoryEntry> history);

SizeInjection size_injection(const Graph& g, const Frame& frame,
                             const ConstructionTrace& trace);

struct ConstructionResult {
  VertexSet packing;
  VertexSet a_hat;
  std::vector<ConstructionTrace> components;
};

/// Independent dominating set of size at most 3|s| for a maximal packing s
/// of a graph with maximum degree at most three. Each component is handled
/// on its own.
ConstructionResult construct(const Graph& g, const VertexSet& s);

}  // namespace packdom
