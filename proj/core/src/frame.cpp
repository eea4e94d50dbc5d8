#include "packdom/frame.hpp"

#include <algorithm>
#include <string>

#include "packdom/errors.hpp"
#include "packdom/packing.hpp"

namespace packdom {

Frame build_frame(const Graph& g, const VertexSet& s) {
  if (g.order() < 2) throw InvalidInput("frame needs at least two vertices");
  if (g.max_degree() > 3) {
    throw InvalidInput("graph is not subcubic (max degree " +
                       std::to_string(g.max_degree()) + ")");
  }
  if (!is_connected(g)) throw InvalidInput("frame needs a connected graph");
  if (s.universe() != g.order()) {
    throw InvalidInput("packing universe does not match graph order");
  }
  if (!is_maximal_packing(g, s)) throw InvalidInput("set is not a maximal packing");

  Frame f;
  f.packing = s;
  f.neighborhood = open_neighborhood(g, s);
  if (!disjoint(f.neighborhood, s)) {
    throw ConsistencyError("packing meets its own neighbourhood");
  }
  f.rest = VertexSet(g.order());
  for (Vertex v = 0; v < g.order(); ++v) {
    if (!s.contains(v) && !f.neighborhood.contains(v)) f.rest.insert(v);
  }

  f.packing_neighbor.assign(g.order(), std::nullopt);
  for (Vertex x : f.neighborhood) {
    std::size_t count = 0;
    for (Vertex w : g.neighbors(x)) {
      if (s.contains(w)) {
        ++count;
        f.packing_neighbor[x] = w;
      }
    }
    if (count != 1) {
      throw ConsistencyError("neighbourhood vertex " + std::to_string(x) +
                             " has " + std::to_string(count) +
                             " packing neighbours");
    }
  }

  f.h = induced_subgraph(g, f.neighborhood);
  if (f.h.graph.max_degree() > 2) {
    throw ConsistencyError("G[N] has a vertex of degree above two");
  }
  const auto parts = decompose_max_degree_two(f.h.graph);
  auto lift = [&](const std::vector<Vertex>& local) {
    std::vector<Vertex> out;
    out.reserve(local.size());
    for (Vertex x : local) out.push_back(f.h.to_parent[x]);
    return out;
  };
  for (const auto& c : parts.cycles) f.cycles.push_back(lift(c));
  f.isolated = VertexSet(g.order());
  for (Vertex x : parts.isolated) f.isolated.insert(f.h.to_parent[x]);
  for (const auto& p : parts.paths) {
    auto path = lift(p);
    if (path.size() == 2) {
      f.matching.emplace_back(std::min(path[0], path[1]), std::max(path[0], path[1]));
    } else {
      f.long_paths.push_back(std::move(path));
    }
  }
  std::sort(f.matching.begin(), f.matching.end());

  f.matched = VertexSet(g.order());
  f.partner.assign(g.order(), std::nullopt);
  f.matching_index.assign(g.order(), std::nullopt);
  for (std::size_t i = 0; i < f.matching.size(); ++i) {
    auto [a, b] = f.matching[i];
    f.matched.insert(a);
    f.matched.insert(b);
    f.partner[a] = b;
    f.partner[b] = a;
    f.matching_index[a] = i;
    f.matching_index[b] = i;
  }

  if (!is_dominating(g, f.neighborhood)) {
    throw ConsistencyError("packing neighbourhood does not dominate the graph");
  }
  return f;
}

VertexSet x_of(const Graph& g, const Frame& frame, const VertexSet& b) {
  VertexSet out(g.order());
  for (Vertex s : frame.packing) {
    if (g.degree(s) != 3) continue;
    bool inside = true;
    for (Vertex w : g.neighbors(s)) {
      if (!frame.matched.contains(w) || b.contains(w)) {
        inside = false;
        break;
      }
    }
    if (inside) out.insert(s);
  }
  return out;
}

ASet make_aset(const Graph& g, const Frame& frame, VertexSet members) {
  auto x = x_of(g, frame, members);
  return ASet{std::move(members), std::move(x)};
}

bool satisfies_endpoint_condition(const Frame& frame, const VertexSet& a) {
  for (const auto& p : frame.long_paths) {
    if (!a.contains(p.front()) || !a.contains(p.back())) return false;
  }
  return true;
}

bool satisfies_maximality_condition(const Graph& g, const Frame& frame,
                                    const VertexSet& a) {
  for (Vertex x : a) {
    if (!frame.neighborhood.contains(x)) return false;
  }
  for (Vertex x : frame.neighborhood) {
    bool has_a_neighbor = false;
    for (Vertex w : g.neighbors(x)) {
      if (frame.neighborhood.contains(w) && a.contains(w)) {
        if (a.contains(x)) return false;  // two adjacent members
        has_a_neighbor = true;
      }
    }
    if (!a.contains(x) && !has_a_neighbor) return false;
  }
  return true;
}

ASet initial_a(const Graph& g, const Frame& frame) {
  VertexSet a(g.order());
  for (const auto& p : frame.long_paths) {
    a.insert(p.front());
    a.insert(p.back());
  }
  for (Vertex x : frame.isolated) a.insert(x);
  for (Vertex x : frame.neighborhood) {
    if (a.contains(x)) continue;
    bool free = true;
    for (Vertex w : g.neighbors(x)) {
      if (frame.neighborhood.contains(w) && a.contains(w)) {
        free = false;
        break;
      }
    }
    if (free) a.insert(x);
  }
  if (!satisfies_endpoint_condition(frame, a) ||
      !satisfies_maximality_condition(g, frame, a)) {
    throw ConsistencyError("initial A violates conditions (i)/(ii)");
  }
  return make_aset(g, frame, std::move(a));
}

QFrame build_q(const Graph& g, const Frame& frame, const ASet& a) {
  QFrame qf;
  qf.q_index.assign(g.order(), std::nullopt);
  for (Vertex s : frame.packing) {
    if (g.degree(s) != 3) continue;
    auto nb = g.neighbors(s);
    if (std::all_of(nb.begin(), nb.end(),
                    [&](Vertex w) { return frame.matched.contains(w); })) {
      qf.q_index[s] = static_cast<Vertex>(qf.q_vertices.size());
      qf.q_vertices.push_back(s);
    }
  }
  qf.q = Multigraph(qf.q_vertices.size());
  for (std::size_t i = 0; i < frame.matching.size(); ++i) {
    auto [x, y] = frame.matching[i];
    auto qx = qf.q_index[*frame.packing_neighbor[x]];
    auto qy = qf.q_index[*frame.packing_neighbor[y]];
    if (!qx || !qy) continue;
    qf.q.add_edge(*qx, *qy, static_cast<std::int64_t>(i));
    qf.witness.push_back(QWitness{i, x, y});
  }
  if (qf.q.max_degree() > 3) {
    throw ConsistencyError("Q is not subcubic");
  }

  qf.q_prime = VertexSet(qf.q_vertices.size());
  for (const auto& block : components(qf.q)) {
    bool meets_x = std::any_of(block.begin(), block.end(), [&](Vertex qv) {
      return a.x.contains(qf.q_vertices[qv]);
    });
    if (meets_x) {
      for (Vertex qv : block) qf.q_prime.insert(qv);
    }
  }
  return qf;
}

}  // namespace packdom
