#include "packdom/packing.hpp"

#include <bit>
#include <string>

#include "packdom/errors.hpp"
#include "packdom/random.hpp"

namespace packdom {

namespace {

using Mask = std::uint64_t;

void check_members(const Graph& g, const VertexSet& s) {
  for (Vertex v : s) {
    if (v >= g.order()) {
      throw InvalidInput("vertex " + std::to_string(v) + " out of range for " +
                         std::to_string(g.order()) + " vertices");
    }
  }
}

bool packing_by_distance(const Graph& g, const VertexSet& s) {
  for (Vertex u : s) {
    auto dist = bfs_distances(g, u);
    for (Vertex v : s) {
      if (v != u && dist[v] && *dist[v] < 3) return false;
    }
  }
  return true;
}

bool packing_by_neighborhoods(const Graph& g, const VertexSet& s) {
  std::vector<bool> covered(g.order(), false);
  for (Vertex u : s) {
    for (Vertex x : closed_neighborhood(g, u)) {
      if (covered[x]) return false;
      covered[x] = true;
    }
  }
  return true;
}

/// Bitmask view of a graph for the exhaustive searches.
struct MaskGraph {
  std::size_t n = 0;
  Mask all = 0;
  std::vector<Mask> closed;  // N[v]
  std::vector<Mask> ball2;   // vertices within distance two of v
};

MaskGraph mask_graph(const Graph& g, const OracleLimits& limits) {
  const std::size_t cap = std::min<std::size_t>(limits.max_vertices, 64);
  if (g.order() > cap) {
    throw GuardExceeded("exhaustive search refused: " + std::to_string(g.order()) +
                        " vertices exceeds the cap of " + std::to_string(cap));
  }
  MaskGraph mg;
  mg.n = g.order();
  mg.all = mg.n == 64 ? ~Mask{0} : (Mask{1} << mg.n) - 1;
  mg.closed.assign(mg.n, 0);
  for (Vertex v = 0; v < mg.n; ++v) {
    mg.closed[v] = Mask{1} << v;
    for (Vertex w : g.neighbors(v)) mg.closed[v] |= Mask{1} << w;
  }
  mg.ball2.assign(mg.n, 0);
  for (Vertex v = 0; v < mg.n; ++v) {
    Mask ball = mg.closed[v];
    for (Vertex w : g.neighbors(v)) ball |= mg.closed[w];
    mg.ball2[v] = ball;
  }
  return mg;
}

VertexSet to_set(const MaskGraph& mg, Mask m) {
  std::vector<Vertex> out;
  while (m) {
    out.push_back(static_cast<Vertex>(std::countr_zero(m)));
    m &= m - 1;
  }
  return VertexSet(mg.n, std::move(out));
}

/// Maximum independent set of the distance-at-most-two conflict graph.
/// Include-first branching visits sets in lexicographic order, and only
/// strictly larger sets replace the incumbent, so the witness is the
/// lexicographically least maximum packing.
void max_packing_search(const MaskGraph& mg, Mask chosen, Mask candidates,
                        Mask& best) {
  if (candidates == 0) {
    if (std::popcount(chosen) > std::popcount(best)) best = chosen;
    return;
  }
  if (std::popcount(chosen) + std::popcount(candidates) <= std::popcount(best)) {
    return;
  }
  const int v = std::countr_zero(candidates);
  const Mask bit = Mask{1} << v;
  max_packing_search(mg, chosen | bit, candidates & ~mg.ball2[v], best);
  max_packing_search(mg, chosen, candidates & ~bit, best);
}

/// Lexicographically first k-subset (optionally independent) whose closed
/// neighbourhoods cover every vertex.
bool covering_subset(const MaskGraph& mg, std::size_t k, bool independent,
                     int next, Mask chosen, Mask covered, Mask& found) {
  if (k == 0) {
    if (covered == mg.all) {
      found = chosen;
      return true;
    }
    return false;
  }
  for (int v = next; v + static_cast<int>(k) <= static_cast<int>(mg.n); ++v) {
    const Mask bit = Mask{1} << v;
    if (independent && (mg.closed[v] & chosen)) continue;
    // Vertices below v that are still uncovered can only be covered by a
    // later neighbour; give up early when none remains.
    const Mask low = bit - 1;
    Mask uncovered_low = low & ~covered & ~mg.closed[v];
    bool reachable = true;
    while (uncovered_low) {
      const int x = std::countr_zero(uncovered_low);
      uncovered_low &= uncovered_low - 1;
      if ((mg.closed[x] & ~(low | bit)) == 0) {
        reachable = false;
        break;
      }
    }
    if (!reachable) continue;
    if (covering_subset(mg, k - 1, independent, v + 1, chosen | bit,
                        covered | mg.closed[v], found)) {
      return true;
    }
  }
  return false;
}

VertexSet minimum_cover(const Graph& g, bool independent,
                        const OracleLimits& limits) {
  auto mg = mask_graph(g, limits);
  if (mg.n == 0) return VertexSet(0);
  for (std::size_t k = 1; k <= mg.n; ++k) {
    Mask found = 0;
    if (covering_subset(mg, k, independent, 0, 0, 0, found)) {
      return to_set(mg, found);
    }
  }
  throw ConsistencyError("no covering set found; the whole vertex set must cover");
}

}  // namespace

bool is_packing(const Graph& g, const VertexSet& s) {
  check_members(g, s);
  const bool by_distance = packing_by_distance(g, s);
  const bool by_neighborhoods = packing_by_neighborhoods(g, s);
  if (by_distance != by_neighborhoods) {
    throw ConsistencyError("packing checks disagree");
  }
  return by_distance;
}

bool is_maximal_packing(const Graph& g, const VertexSet& s) {
  if (!is_packing(g, s)) throw InvalidInput("set is not a packing");
  std::vector<bool> blocked(g.order(), false);
  for (Vertex u : s) {
    auto dist = bfs_distances(g, u);
    for (Vertex v = 0; v < g.order(); ++v) {
      if (dist[v] && *dist[v] < 3) blocked[v] = true;
    }
  }
  for (Vertex v = 0; v < g.order(); ++v) {
    if (!blocked[v]) return false;
  }
  return true;
}

bool is_independent(const Graph& g, const VertexSet& s) {
  check_members(g, s);
  for (Vertex u : s) {
    for (Vertex w : g.neighbors(u)) {
      if (s.contains(w)) return false;
    }
  }
  return true;
}

bool is_dominating(const Graph& g, const VertexSet& s) {
  check_members(g, s);
  return closed_neighborhood(g, s).size() == g.order();
}

bool is_independent_dominating(const Graph& g, const VertexSet& s) {
  return is_independent(g, s) && is_dominating(g, s);
}

VertexSet greedy_maximal_packing(const Graph& g, std::span<const Vertex> order) {
  VertexSet out(g.order());
  std::vector<bool> blocked(g.order(), false);
  for (Vertex v : order) {
    if (v >= g.order()) throw InvalidInput("scan order entry out of range");
    if (blocked[v]) continue;
    out.insert(v);
    auto dist = bfs_distances(g, v);
    for (Vertex x = 0; x < g.order(); ++x) {
      if (dist[x] && *dist[x] < 3) blocked[x] = true;
    }
  }
  return out;
}

VertexSet greedy_maximal_packing(const Graph& g, std::uint64_t seed) {
  auto order = scan_order(g.order(), seed);
  return greedy_maximal_packing(g, order);
}

VertexSet greedy_maximal_independent_set(const Graph& g,
                                         std::span<const Vertex> order) {
  VertexSet out(g.order());
  std::vector<bool> blocked(g.order(), false);
  for (Vertex v : order) {
    if (v >= g.order()) throw InvalidInput("scan order entry out of range");
    if (blocked[v]) continue;
    out.insert(v);
    blocked[v] = true;
    for (Vertex w : g.neighbors(v)) blocked[w] = true;
  }
  return out;
}

VertexSet greedy_maximal_independent_set(const Graph& g, std::uint64_t seed) {
  auto order = scan_order(g.order(), seed);
  return greedy_maximal_independent_set(g, order);
}

void for_each_maximal_packing(const Graph& g,
                              const std::function<bool(const VertexSet&)>& visit,
                              OracleLimits limits) {
  auto mg = mask_graph(g, limits);
  bool keep_going = true;
  // Include-first recursion over vertices in index order. A vertex may be
  // skipped only if something chosen later or earlier blocks it; that is
  // checked at the leaf.
  auto rec = [&](auto&& self, std::size_t v, Mask chosen, Mask blocked) -> void {
    if (!keep_going) return;
    if (v == mg.n) {
      if (blocked == mg.all) keep_going = visit(to_set(mg, chosen));
      return;
    }
    const Mask bit = Mask{1} << v;
    if (!(blocked & bit)) {
      self(self, v + 1, chosen | bit, blocked | mg.ball2[v]);
    }
    // Skipping v is pointless if nothing left could ever block it.
    Mask future = 0;
    for (std::size_t x = v + 1; x < mg.n; ++x) {
      if (!(blocked & (Mask{1} << x))) future |= Mask{1} << x;
    }
    if ((blocked & bit) || (mg.ball2[v] & future)) {
      self(self, v + 1, chosen, blocked);
    }
  };
  rec(rec, 0, 0, 0);
}

std::vector<VertexSet> enumerate_maximal_packings(const Graph& g,
                                                  std::size_t limit,
                                                  OracleLimits limits) {
  std::vector<VertexSet> out;
  if (limit == 0) return out;
  for_each_maximal_packing(
      g,
      [&](const VertexSet& s) {
        out.push_back(s);
        return out.size() < limit;
      },
      limits);
  return out;
}

VertexSet maximum_packing(const Graph& g, OracleLimits limits) {
  auto mg = mask_graph(g, limits);
  Mask best = 0;
  max_packing_search(mg, 0, mg.all, best);
  return to_set(mg, best);
}

VertexSet minimum_independent_dominating_set(const Graph& g, OracleLimits limits) {
  return minimum_cover(g, true, limits);
}

VertexSet minimum_dominating_set(const Graph& g, OracleLimits limits) {
  return minimum_cover(g, false, limits);
}

std::size_t packing_number_bruteforce(const Graph& g, OracleLimits limits) {
  return maximum_packing(g, limits).size();
}

std::size_t idom_number_bruteforce(const Graph& g, OracleLimits limits) {
  return minimum_independent_dominating_set(g, limits).size();
}

std::size_t dom_number_bruteforce(const Graph& g, OracleLimits limits) {
  return minimum_dominating_set(g, limits).size();
}

}  // namespace packdom
