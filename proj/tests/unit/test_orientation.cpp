#include <algorithm>

#include "doctest.h"
#include "packdom/errors.hpp"
#include "packdom/generators.hpp"
#include "packdom/orientation.hpp"

using namespace packdom;

namespace {

Multigraph multigraph(std::size_t n, std::initializer_list<std::pair<Vertex, Vertex>> edges) {
  Multigraph m(n);
  for (auto [u, v] : edges) m.add_edge(u, v);
  return m;
}

std::vector<std::size_t> in_degrees(const Orientation& d) {
  std::vector<std::size_t> out(d.base().order());
  for (Vertex v = 0; v < out.size(); ++v) out[v] = d.in_degree(v);
  return out;
}

std::vector<std::size_t> out_degrees(const Orientation& d) {
  std::vector<std::size_t> out(d.base().order());
  for (Vertex v = 0; v < out.size(); ++v) out[v] = d.out_degree(v);
  return out;
}

// Sources by recounting arc heads directly.
std::size_t count_sources(const Orientation& d) {
  std::vector<bool> hit(d.base().order(), false);
  for (auto [t, h] : d.arcs()) hit[h] = true;
  return static_cast<std::size_t>(std::count(hit.begin(), hit.end(), false));
}

std::vector<std::pair<Vertex, Vertex>> undirected(const Orientation& d) {
  std::vector<std::pair<Vertex, Vertex>> out;
  for (auto [t, h] : d.arcs()) out.emplace_back(std::min(t, h), std::max(t, h));
  std::sort(out.begin(), out.end());
  return out;
}

void check_replay(const Multigraph& m) {
  auto result = orient_no_sources(m);
  CHECK(count_sources(result.orientation) == 0);
  CHECK(sources(result.orientation).empty());
  CHECK(result.orientation.base() == m);
  CHECK(undirected(result.orientation) == m.edge_multiset());

  Orientation d = orient_arbitrary(m);
  const std::size_t initial = count_sources(d);
  CHECK(result.steps.size() <= initial);
  for (const auto& step : result.steps) {
    auto before_in = in_degrees(d);
    auto before_out = out_degrees(d);
    const std::size_t before = count_sources(d);
    auto [next, replay] = eliminate_source(d, step.source);
    CHECK(replay.target == step.target);
    CHECK(replay.reversed_path == step.reversed_path);
    CHECK(count_sources(next) < before);
    CHECK(next.in_degree(step.source) > 0);
    CHECK(next.in_degree(step.target) > 0);
    for (Vertex u = 0; u < m.order(); ++u) {
      if (u == step.source || u == step.target) continue;
      CHECK(next.in_degree(u) == before_in[u]);
      CHECK(next.out_degree(u) == before_out[u]);
    }
    d = next;
  }
  CHECK(d == result.orientation);
}

}  // namespace

TEST_CASE("orient_arbitrary points edges upward") {
  auto tri = orient_arbitrary(multigraph(3, {{0, 1}, {1, 2}, {0, 2}}));
  auto arcs = tri.arcs();
  std::sort(arcs.begin(), arcs.end());
  CHECK(arcs == std::vector<std::pair<Vertex, Vertex>>{{0, 1}, {0, 2}, {1, 2}});

  auto dbl = orient_arbitrary(multigraph(2, {{0, 1}, {1, 0}}));
  CHECK(dbl.arcs() == std::vector<std::pair<Vertex, Vertex>>{{0, 1}, {0, 1}});

  CHECK(orient_arbitrary(Multigraph{}).arcs().empty());
}

TEST_CASE("sources") {
  auto tri = orient_arbitrary(multigraph(3, {{0, 1}, {1, 2}, {0, 2}}));
  CHECK(sources(tri) == VertexSet(3, {0}));

  Multigraph cyc = multigraph(3, {{0, 1}, {1, 2}, {0, 2}});
  Orientation directed(cyc, {true, true, false});
  CHECK(sources(directed).empty());

  CHECK(sources(orient_arbitrary(multigraph(1, {{0, 0}}))).empty());
}

TEST_CASE("reach_plus") {
  Orientation path = orient_arbitrary(multigraph(3, {{0, 1}, {1, 2}}));
  CHECK(reach_plus(path, 0).members == VertexSet(3, {1, 2}));

  Multigraph cyc = multigraph(3, {{0, 1}, {1, 2}, {0, 2}});
  Orientation directed(cyc, {true, true, false});
  CHECK(reach_plus(directed, 0).members == VertexSet(3, {0, 1, 2}));

  CHECK(reach_plus(orient_arbitrary(Multigraph(1)), 0).members.empty());
}

TEST_CASE("eliminate_source examples") {
  auto tri = orient_arbitrary(multigraph(3, {{0, 1}, {1, 2}, {0, 2}}));
  auto [t2, tri_step] = eliminate_source(tri, 0);
  CHECK(tri_step.target == 2);
  CHECK(tri_step.reversed_path.size() == 1);
  CHECK(count_sources(t2) == 0);

  auto dbl = orient_arbitrary(multigraph(2, {{0, 1}, {0, 1}}));
  auto [d2, dbl_step] = eliminate_source(dbl, 0);
  CHECK(dbl_step.target == 1);
  auto arcs = d2.arcs();
  std::sort(arcs.begin(), arcs.end());
  CHECK(arcs == std::vector<std::pair<Vertex, Vertex>>{{0, 1}, {1, 0}});

  // C4 oriented (0,1),(1,2),(3,2),(3,0)
  Multigraph c4 = multigraph(4, {{0, 1}, {1, 2}, {3, 2}, {3, 0}});
  Orientation d(c4, {true, true, true, true});
  CHECK(sources(d) == VertexSet(4, {3}));
  auto [c4b, c4_step] = eliminate_source(d, 3);
  CHECK(c4_step.target == 2);
  CHECK(c4_step.reversed_path == std::vector<EdgeId>{2});
  CHECK(count_sources(c4b) == 0);

  CHECK_THROWS_AS(eliminate_source(c4b, 0), InvalidInput);
  CHECK_THROWS_AS(eliminate_source(orient_arbitrary(multigraph(2, {{0, 1}})), 0),
                  InvalidInput);
}

TEST_CASE("orient_no_sources examples") {
  auto tri = orient_no_sources(multigraph(3, {{0, 1}, {1, 2}, {0, 2}}));
  for (Vertex v = 0; v < 3; ++v) {
    CHECK(tri.orientation.in_degree(v) == 1);
    CHECK(tri.orientation.out_degree(v) == 1);
  }
  auto dbl = orient_no_sources(multigraph(2, {{0, 1}, {0, 1}}));
  auto arcs = dbl.orientation.arcs();
  std::sort(arcs.begin(), arcs.end());
  CHECK(arcs == std::vector<std::pair<Vertex, Vertex>>{{0, 1}, {1, 0}});

  CHECK_THROWS_AS(orient_no_sources(multigraph(3, {{0, 1}, {1, 2}})), InvalidInput);
}

TEST_CASE("orient_no_sources on every small multigraph") {
  std::size_t count = 0;
  for (std::size_t n = 1; n <= 4; ++n) {
    for (std::size_t m = n; m <= 6; ++m) {
      for_each_multigraph_min2(n, m, [&](const Multigraph& g) {
        ++count;
        check_replay(g);
        return true;
      });
    }
  }
  CHECK(count > 100);
}

TEST_CASE("orient_no_sources on random multigraphs") {
  for (std::uint64_t seed = 1; seed <= 200; ++seed) {
    const std::size_t n = 1 + seed % 30;
    check_replay(random_multigraph_min2(n, n + seed % 17, seed));
  }
}

TEST_CASE("disconnected multigraphs are handled per component") {
  auto r = orient_no_sources(multigraph(5, {{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 3}}));
  CHECK(sources(r.orientation).empty());
}
