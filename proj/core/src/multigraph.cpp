#include "packdom/multigraph.hpp"

#include <algorithm>
#include <string>

#include "packdom/errors.hpp"

namespace packdom {

EdgeId Multigraph::add_edge(Vertex u, Vertex v, std::int64_t tag) {
  if (u >= order() || v >= order()) {
    throw InvalidInput("multigraph edge {" + std::to_string(u) + "," +
                       std::to_string(v) + "} out of range");
  }
  const auto id = static_cast<EdgeId>(edges_.size());
  edges_.push_back(Edge{id, u, v, tag});
  incidence_[u].push_back(id);
  if (u != v) incidence_[v].push_back(id);
  return id;
}

std::size_t Multigraph::degree(Vertex v) const {
  std::size_t d = 0;
  for (EdgeId e : incident(v)) d += edges_[e].is_loop() ? 2 : 1;
  return d;
}

std::size_t Multigraph::min_degree() const {
  if (order() == 0) return 0;
  std::size_t best = degree(0);
  for (Vertex v = 1; v < order(); ++v) best = std::min(best, degree(v));
  return best;
}

std::size_t Multigraph::max_degree() const {
  std::size_t best = 0;
  for (Vertex v = 0; v < order(); ++v) best = std::max(best, degree(v));
  return best;
}

std::vector<std::pair<Vertex, Vertex>> Multigraph::edge_multiset() const {
  std::vector<std::pair<Vertex, Vertex>> out;
  out.reserve(edges_.size());
  for (const auto& e : edges_) out.emplace_back(std::minmax(e.u, e.v));
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::vector<Vertex>> components(const Multigraph& m) {
  std::vector<std::vector<Vertex>> out;
  std::vector<bool> seen(m.order(), false);
  for (Vertex start = 0; start < m.order(); ++start) {
    if (seen[start]) continue;
    std::vector<Vertex> block{start};
    seen[start] = true;
    for (std::size_t i = 0; i < block.size(); ++i) {
      for (EdgeId e : m.incident(block[i])) {
        Vertex w = m.edge(e).other(block[i]);
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

bool is_connected(const Multigraph& m) { return components(m).size() <= 1; }

}  // namespace packdom
