#include "packdom/orientation.hpp"

#include <algorithm>
#include <optional>
#include <string>

#include "packdom/errors.hpp"

namespace packdom {

Orientation::Orientation(Multigraph base, std::vector<bool> forward)
    : base_(std::move(base)), forward_(std::move(forward)) {
  if (forward_.size() != base_.size()) {
    throw InvalidInput("orientation has " + std::to_string(forward_.size()) +
                       " directions for " + std::to_string(base_.size()) +
                       " edges");
  }
}

Vertex Orientation::tail(EdgeId e) const {
  const auto& edge = base_.edge(e);
  return forward_.at(e) ? edge.u : edge.v;
}

Vertex Orientation::head(EdgeId e) const {
  const auto& edge = base_.edge(e);
  return forward_.at(e) ? edge.v : edge.u;
}

std::size_t Orientation::in_degree(Vertex v) const {
  std::size_t d = 0;
  for (EdgeId e : base_.incident(v)) d += head(e) == v ? 1 : 0;
  return d;
}

std::size_t Orientation::out_degree(Vertex v) const {
  std::size_t d = 0;
  for (EdgeId e : base_.incident(v)) d += tail(e) == v ? 1 : 0;
  return d;
}

std::vector<std::pair<Vertex, Vertex>> Orientation::arcs() const {
  std::vector<std::pair<Vertex, Vertex>> out;
  out.reserve(base_.size());
  for (EdgeId e = 0; e < base_.size(); ++e) out.emplace_back(tail(e), head(e));
  return out;
}

Orientation orient_arbitrary(const Multigraph& m) {
  std::vector<bool> forward(m.size());
  for (const auto& e : m.edges()) forward[e.id] = e.u <= e.v;
  return Orientation(m, std::move(forward));
}

VertexSet sources(const Orientation& d) {
  VertexSet out(d.base().order());
  for (Vertex v = 0; v < d.base().order(); ++v) {
    if (d.in_degree(v) == 0) out.insert(v);
  }
  return out;
}

namespace {

/// Breadth-first layers over non-loop arcs from `origin`; parent_edge[x] is
/// the arc through which x was first discovered.
struct DirectedBfs {
  std::vector<std::vector<Vertex>> layers;
  std::vector<std::optional<EdgeId>> parent_edge;
  std::vector<bool> seen;
};

DirectedBfs directed_bfs(const Orientation& d, Vertex origin) {
  const auto& m = d.base();
  DirectedBfs bfs;
  bfs.parent_edge.assign(m.order(), std::nullopt);
  bfs.seen.assign(m.order(), false);
  bfs.seen[origin] = true;
  std::vector<Vertex> frontier{origin};
  while (!frontier.empty()) {
    std::vector<Vertex> next;
    for (Vertex x : frontier) {
      for (EdgeId e : m.incident(x)) {
        if (m.edge(e).is_loop() || d.tail(e) != x) continue;
        Vertex y = d.head(e);
        if (bfs.seen[y]) continue;
        bfs.seen[y] = true;
        bfs.parent_edge[y] = e;
        next.push_back(y);
      }
    }
    if (!next.empty()) bfs.layers.push_back(next);
    frontier = std::move(next);
  }
  return bfs;
}

void require_min_degree_two(const Multigraph& m, Vertex v) {
  for (const auto& block : components(m)) {
    if (!std::binary_search(block.begin(), block.end(), v)) continue;
    for (Vertex x : block) {
      if (m.degree(x) < 2) {
        throw InvalidInput("vertex " + std::to_string(x) + " has degree " +
                           std::to_string(m.degree(x)) +
                           " < 2 in the component of the source");
      }
    }
  }
}

}  // namespace

ReachSet reach_plus(const Orientation& d, Vertex v) {
  const auto& m = d.base();
  if (v >= m.order()) throw InvalidInput("vertex out of range");
  auto bfs = directed_bfs(d, v);
  VertexSet members(m.order());
  for (const auto& layer : bfs.layers) {
    for (Vertex x : layer) members.insert(x);
  }
  // v itself belongs iff some reached vertex (or v, via a loop) has an arc
  // back into v.
  for (EdgeId e : m.incident(v)) {
    if (d.head(e) != v) continue;
    Vertex t = d.tail(e);
    if (t == v || members.contains(t)) {
      members.insert(v);
      break;
    }
  }
  return ReachSet{v, std::move(members)};
}

std::pair<Orientation, SourceEliminationStep> eliminate_source(
    const Orientation& d, Vertex v) {
  const auto& m = d.base();
  if (v >= m.order()) throw InvalidInput("vertex out of range");
  if (d.in_degree(v) != 0) {
    throw InvalidInput("vertex " + std::to_string(v) + " is not a source");
  }
  require_min_degree_two(m, v);

  auto bfs = directed_bfs(d, v);
  std::optional<Vertex> target;
  for (const auto& layer : bfs.layers) {
    for (Vertex x : layer) {
      if (d.in_degree(x) >= 2 && (!target || x < *target)) target = x;
    }
    if (target) break;
  }
  if (!target) {
    throw ConsistencyError("no vertex of in-degree >= 2 reachable from source " +
                           std::to_string(v));
  }

  SourceEliminationStep step{v, *target, {}};
  for (Vertex x = *target; x != v;) {
    EdgeId e = *bfs.parent_edge[x];
    step.reversed_path.push_back(e);
    x = d.tail(e);
  }
  std::reverse(step.reversed_path.begin(), step.reversed_path.end());

  Orientation out = d;
  for (EdgeId e : step.reversed_path) out.reverse(e);
  return {std::move(out), std::move(step)};
}

SourceFreeOrientation orient_no_sources(const Multigraph& m) {
  for (Vertex x = 0; x < m.order(); ++x) {
    if (m.degree(x) < 2) {
      throw InvalidInput("vertex " + std::to_string(x) + " has degree " +
                         std::to_string(m.degree(x)) + " < 2");
    }
  }
  SourceFreeOrientation out{orient_arbitrary(m), {}};
  for (auto src = sources(out.orientation); !src.empty();
       src = sources(out.orientation)) {
    auto [next, step] = eliminate_source(out.orientation, *src.begin());
    out.orientation = std::move(next);
    out.steps.push_back(std::move(step));
  }
  return out;
}

}  // namespace packdom
