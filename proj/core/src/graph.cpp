#include "packdom/graph.hpp"

#include <algorithm>
#include <deque>
#include <string>

#include "packdom/errors.hpp"

namespace packdom {

// VertexSet -----------------------------------------------------------------

VertexSet::VertexSet(std::size_t universe, std::vector<Vertex> members)
    : universe_(universe), members_(std::move(members)) {
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
  if (!members_.empty() && members_.back() >= universe_) {
    throw InvalidInput("vertex " + std::to_string(members_.back()) +
                       " out of range for " + std::to_string(universe_) +
                       " vertices");
  }
}

void VertexSet::insert(Vertex v) {
  if (v >= universe_) {
    throw InvalidInput("vertex " + std::to_string(v) + " out of range");
  }
  auto it = std::lower_bound(members_.begin(), members_.end(), v);
  if (it == members_.end() || *it != v) members_.insert(it, v);
}

void VertexSet::erase(Vertex v) {
  auto it = std::lower_bound(members_.begin(), members_.end(), v);
  if (it != members_.end() && *it == v) members_.erase(it);
}

std::vector<bool> VertexSet::indicator() const {
  std::vector<bool> bits(universe_, false);
  for (Vertex v : members_) bits[v] = true;
  return bits;
}

VertexSet set_union(const VertexSet& a, const VertexSet& b) {
  std::vector<Vertex> out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return VertexSet(std::max(a.universe(), b.universe()), std::move(out));
}

VertexSet set_difference(const VertexSet& a, const VertexSet& b) {
  std::vector<Vertex> out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(),
                      std::back_inserter(out));
  return VertexSet(a.universe(), std::move(out));
}

VertexSet set_intersection(const VertexSet& a, const VertexSet& b) {
  std::vector<Vertex> out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                        std::back_inserter(out));
  return VertexSet(a.universe(), std::move(out));
}

bool disjoint(const VertexSet& a, const VertexSet& b) {
  return set_intersection(a, b).empty();
}

// Graph -----------------------------------------------------------------------

Graph::Graph(std::size_t n, std::span<const Edge> edges) : adj_(n) {
  for (auto [u, v] : edges) add_edge(u, v);
}

void Graph::add_edge(Vertex u, Vertex v) {
  if (u >= order() || v >= order()) {
    throw InvalidInput("edge {" + std::to_string(u) + "," + std::to_string(v) +
                       "} out of range for " + std::to_string(order()) +
                       " vertices");
  }
  if (u == v) throw InvalidInput("loop at vertex " + std::to_string(u));
  auto& au = adj_[u];
  auto it = std::lower_bound(au.begin(), au.end(), v);
  if (it != au.end() && *it == v) {
    throw InvalidInput("duplicate edge {" + std::to_string(u) + "," +
                       std::to_string(v) + "}");
  }
  au.insert(it, v);
  auto& av = adj_[v];
  av.insert(std::lower_bound(av.begin(), av.end(), u), u);
  ++m_;
}

bool Graph::adjacent(Vertex u, Vertex v) const {
  const auto& au = adj_.at(u);
  return std::binary_search(au.begin(), au.end(), v);
}

std::size_t Graph::max_degree() const noexcept {
  std::size_t best = 0;
  for (const auto& a : adj_) best = std::max(best, a.size());
  return best;
}

std::size_t Graph::min_degree() const noexcept {
  if (adj_.empty()) return 0;
  std::size_t best = adj_.front().size();
  for (const auto& a : adj_) best = std::min(best, a.size());
  return best;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(m_);
  for (Vertex u = 0; u < order(); ++u) {
    for (Vertex v : adj_[u]) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

// Traversal -------------------------------------------------------------------

namespace {

void check_vertex(const Graph& g, Vertex v) {
  if (v >= g.order()) {
    throw InvalidInput("vertex " + std::to_string(v) + " out of range for " +
                       std::to_string(g.order()) + " vertices");
  }
}

}  // namespace

std::vector<Distance> bfs_distances(const Graph& g, Vertex source) {
  check_vertex(g, source);
  std::vector<Distance> dist(g.order());
  std::deque<Vertex> queue{source};
  dist[source] = 0;
  while (!queue.empty()) {
    Vertex u = queue.front();
    queue.pop_front();
    for (Vertex w : g.neighbors(u)) {
      if (!dist[w]) {
        dist[w] = *dist[u] + 1;
        queue.push_back(w);
      }
    }
  }
  return dist;
}

Distance distance(const Graph& g, Vertex u, Vertex v) {
  check_vertex(g, v);
  return bfs_distances(g, u)[v];
}

std::vector<std::vector<Vertex>> components(const Graph& g) {
  std::vector<std::vector<Vertex>> out;
  std::vector<bool> seen(g.order(), false);
  for (Vertex start = 0; start < g.order(); ++start) {
    if (seen[start]) continue;
    std::vector<Vertex> block{start};
    seen[start] = true;
    for (std::size_t i = 0; i < block.size(); ++i) {
      for (Vertex w : g.neighbors(block[i])) {
        if (!seen[w]) {
          seen[w] = true;
          block.push_back(w);
        }
      }
    }
    std::sort(block.begin(), block.end());
    out.push_back(std::move(block));
  }
  return out;
}

bool is_connected(const Graph& g) { return components(g).size() <= 1; }

VertexSet open_neighborhood(const Graph& g, Vertex v) {
  auto nb = g.neighbors(v);
  return VertexSet(g.order(), std::vector<Vertex>(nb.begin(), nb.end()));
}

VertexSet closed_neighborhood(const Graph& g, Vertex v) {
  auto out = open_neighborhood(g, v);
  out.insert(v);
  return out;
}

VertexSet open_neighborhood(const Graph& g, const VertexSet& s) {
  std::vector<Vertex> out;
  for (Vertex v : s) {
    check_vertex(g, v);
    auto nb = g.neighbors(v);
    out.insert(out.end(), nb.begin(), nb.end());
  }
  return VertexSet(g.order(), std::move(out));
}

VertexSet closed_neighborhood(const Graph& g, const VertexSet& s) {
  auto out = open_neighborhood(g, s);
  for (Vertex v : s) out.insert(v);
  return out;
}

InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& s) {
  InducedSubgraph out;
  out.from_parent.assign(g.order(), std::nullopt);
  for (Vertex v : s) {
    check_vertex(g, v);
    out.from_parent[v] = static_cast<Vertex>(out.to_parent.size());
    out.to_parent.push_back(v);
  }
  out.graph = Graph(out.to_parent.size());
  for (Vertex v : s) {
    for (Vertex w : g.neighbors(v)) {
      if (v < w && out.from_parent[w]) {
        out.graph.add_edge(*out.from_parent[v], *out.from_parent[w]);
      }
    }
  }
  return out;
}

Graph relabel(const Graph& g, std::span<const Vertex> perm) {
  if (perm.size() != g.order()) {
    throw InvalidInput("permutation length does not match graph order");
  }
  Graph out(g.order());
  for (auto [u, v] : g.edges()) out.add_edge(perm[u], perm[v]);
  return out;
}

Graph disjoint_union(const Graph& a, const Graph& b) {
  Graph out(a.order() + b.order());
  for (auto [u, v] : a.edges()) out.add_edge(u, v);
  const auto shift = static_cast<Vertex>(a.order());
  for (auto [u, v] : b.edges()) out.add_edge(u + shift, v + shift);
  return out;
}

DegreeTwoDecomposition decompose_max_degree_two(const Graph& h) {
  for (Vertex v = 0; v < h.order(); ++v) {
    if (h.degree(v) > 2) {
      throw InvalidInput("vertex " + std::to_string(v) + " has degree " +
                         std::to_string(h.degree(v)) + " > 2");
    }
  }
  DegreeTwoDecomposition out;
  out.isolated = VertexSet(h.order());
  std::vector<bool> seen(h.order(), false);

  auto walk = [&](Vertex start, Vertex next) {
    std::vector<Vertex> seq{start};
    seen[start] = true;
    Vertex prev = start;
    Vertex cur = next;
    while (cur != start && !seen[cur]) {
      seen[cur] = true;
      seq.push_back(cur);
      auto nb = h.neighbors(cur);
      if (nb.size() < 2) break;
      Vertex step = nb[0] == prev ? nb[1] : nb[0];
      prev = cur;
      cur = step;
    }
    return seq;
  };

  // Paths first, entered from their smaller endpoint.
  for (Vertex v = 0; v < h.order(); ++v) {
    if (seen[v]) continue;
    if (h.degree(v) == 0) {
      seen[v] = true;
      out.isolated.insert(v);
    } else if (h.degree(v) == 1) {
      out.paths.push_back(walk(v, h.neighbors(v)[0]));
    }
  }
  for (Vertex v = 0; v < h.order(); ++v) {
    if (!seen[v]) out.cycles.push_back(walk(v, h.neighbors(v)[0]));
  }
  return out;
}

}  // namespace packdom
