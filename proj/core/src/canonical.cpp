#include "packdom/canonical.hpp"

#include <algorithm>
#include <string>

#include "packdom/errors.hpp"

namespace packdom {

namespace {

using Cells = std::vector<std::vector<int>>;

struct SmallGraph {
  int n = 0;
  std::vector<std::uint32_t> adj;

  bool edge(int u, int v) const { return (adj[u] >> v) & 1U; }
};

SmallGraph small(const Graph& g) {
  if (g.order() > kMaxCanonicalOrder) {
    throw GuardExceeded("canonical form supports at most " +
                        std::to_string(kMaxCanonicalOrder) + " vertices");
  }
  SmallGraph s;
  s.n = static_cast<int>(g.order());
  s.adj.assign(g.order(), 0);
  for (auto [u, v] : g.edges()) {
    s.adj[u] |= 1U << v;
    s.adj[v] |= 1U << u;
  }
  return s;
}

/// Splits cells by neighbour counts into every cell until the ordered
/// partition is equitable. Sub-cells are ordered by their count vectors, so
/// the result depends only on the graph and the input partition up to
/// relabelling.
Cells refine(const SmallGraph& g, Cells cells) {
  std::vector<int> cell_of(g.n);
  for (;;) {
    for (std::size_t c = 0; c < cells.size(); ++c) {
      for (int v : cells[c]) cell_of[v] = static_cast<int>(c);
    }
    Cells next;
    for (const auto& cell : cells) {
      if (cell.size() == 1) {
        next.push_back(cell);
        continue;
      }
      std::vector<std::pair<std::vector<int>, int>> keyed;
      for (int v : cell) {
        std::vector<int> counts(cells.size(), 0);
        for (int w = 0; w < g.n; ++w) {
          if (g.edge(v, w)) ++counts[cell_of[w]];
        }
        keyed.emplace_back(std::move(counts), v);
      }
      std::sort(keyed.begin(), keyed.end());
      for (std::size_t i = 0; i < keyed.size(); ++i) {
        if (i == 0 || keyed[i].first != keyed[i - 1].first) next.emplace_back();
        next.back().push_back(keyed[i].second);
      }
    }
    if (next.size() == cells.size()) return next;
    cells = std::move(next);
  }
}

std::uint64_t code_of(const SmallGraph& g, const Cells& discrete) {
  std::uint64_t code = 0;
  for (std::size_t j = 1; j < discrete.size(); ++j) {
    for (std::size_t i = 0; i < j; ++i) {
      code = (code << 1) | (g.edge(discrete[i][0], discrete[j][0]) ? 1U : 0U);
    }
  }
  return code;
}

void search(const SmallGraph& g, Cells cells, std::uint64_t& best,
            std::vector<int>& best_order, bool& have) {
  cells = refine(g, std::move(cells));
  auto target = std::find_if(cells.begin(), cells.end(),
                             [](const auto& c) { return c.size() > 1; });
  if (target == cells.end()) {
    const auto code = code_of(g, cells);
    if (!have || code > best) {
      best = code;
      have = true;
      best_order.clear();
      for (const auto& c : cells) best_order.push_back(c[0]);
    }
    return;
  }
  const auto at = static_cast<std::size_t>(target - cells.begin());
  for (int v : cells[at]) {
    Cells branch(cells.begin(), cells.begin() + static_cast<std::ptrdiff_t>(at));
    branch.push_back({v});
    std::vector<int> rest;
    for (int w : cells[at]) {
      if (w != v) rest.push_back(w);
    }
    branch.push_back(std::move(rest));
    branch.insert(branch.end(), cells.begin() + static_cast<std::ptrdiff_t>(at) + 1,
                  cells.end());
    search(g, std::move(branch), best, best_order, have);
  }
}

std::pair<std::uint64_t, std::vector<int>> canonical_labelling(const Graph& g) {
  auto s = small(g);
  if (s.n == 0) return {0, {}};
  Cells start(1);
  for (int v = 0; v < s.n; ++v) start[0].push_back(v);
  std::uint64_t best = 0;
  std::vector<int> order;
  bool have = false;
  search(s, std::move(start), best, order, have);
  return {best, std::move(order)};
}

}  // namespace

CanonicalForm canonical_form(const Graph& g) {
  return CanonicalForm{g.order(), canonical_labelling(g).first};
}

Graph canonical_graph(const Graph& g) {
  auto [code, order] = canonical_labelling(g);
  std::vector<Vertex> perm(g.order());
  for (std::size_t i = 0; i < order.size(); ++i) perm[order[i]] = static_cast<Vertex>(i);
  return relabel(g, perm);
}

bool isomorphic(const Graph& a, const Graph& b) {
  return a.order() == b.order() && a.size() == b.size() &&
         canonical_form(a) == canonical_form(b);
}

}  // namespace packdom
