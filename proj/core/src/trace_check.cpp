#include "packdom/trace_check.hpp"

#include <algorithm>
#include <string>

#include "packdom/packing.hpp"

namespace packdom {

namespace {

struct Violations {
  std::vector<std::string> list;
  void require(bool ok, const std::string& what) {
    if (!ok) list.push_back(what);
  }
};

void check_frame(const Graph& g, const Frame& f, Violations& out) {
  out.require(is_maximal_packing(g, f.packing), "frame packing is not maximal");
  std::vector<int> part_count(g.order(), 0);
  for (Vertex v : f.packing) ++part_count[v];
  for (Vertex v : f.neighborhood) ++part_count[v];
  for (Vertex v : f.rest) ++part_count[v];
  out.require(std::all_of(part_count.begin(), part_count.end(),
                          [](int c) { return c == 1; }),
              "N, R, S do not partition V");
  for (Vertex x : f.neighborhood) {
    std::size_t count = 0;
    for (Vertex w : g.neighbors(x)) count += f.packing.contains(w) ? 1 : 0;
    out.require(count == 1, "N-vertex " + std::to_string(x) +
                                " does not have exactly one S-neighbour");
  }
  out.require(induced_subgraph(g, f.neighborhood).graph.max_degree() <= 2,
              "G[N] has maximum degree above two");
  VertexSet endpoints(g.order());
  for (auto [a, b] : f.matching) {
    endpoints.insert(a);
    endpoints.insert(b);
    out.require(g.adjacent(a, b), "matching edge is not an edge");
    out.require(f.partner[a] == b && f.partner[b] == a, "partner is not an involution");
  }
  out.require(endpoints == f.matched, "W differs from the endpoints of M");
}

bool pairs_off(const Frame& f, const VertexSet& before, const VertexSet& after) {
  std::vector<Vertex> diff;
  std::set_symmetric_difference(before.begin(), before.end(), after.begin(),
                                after.end(), std::back_inserter(diff));
  VertexSet d(before.universe(), diff);
  for (Vertex x : d) {
    if (!f.matched.contains(x) || !d.contains(*f.partner[x])) return false;
  }
  return true;
}

void check_injection(const Graph& g, const Frame& f, const ConstructionTrace& t,
                     const VertexSet& a, Violations& out) {
  const auto& inj = t.injection;
  if (!inj.injective) {
    out.require(!t.anomalies.empty(), "non-injective map was not flagged");
    return;
  }
  out.require(inj.entries.size() == t.a_hat.size(), "injection domain size");
  std::vector<std::pair<int, Vertex>> images;
  for (const auto& e : inj.entries) {
    out.require(t.a_hat.contains(e.from), "injection domain outside A-hat");
    images.emplace_back(static_cast<int>(e.part), e.to);
    switch (e.part) {
      case InjectionTarget::s1:
      case InjectionTarget::s2:
        out.require(e.to == e.from && t.s_prime.contains(e.from) &&
                        g.degree(e.from) == (e.part == InjectionTarget::s1 ? 1u : 2u),
                    "bad S1/S2 image for " + std::to_string(e.from));
        break;
      case InjectionTarget::neighborhood:
        if (a.contains(e.from)) {
          out.require(e.to == e.from, "A vertex not mapped to itself");
        } else {
          out.require(f.neighborhood.contains(e.to) && !a.contains(e.to) &&
                          g.adjacent(e.from, e.to),
                      "bad N image for " + std::to_string(e.from));
          if (t.s_prime.contains(e.from)) {
            std::size_t in_n = 0;
            for (Vertex y : g.neighbors(e.to)) in_n += f.neighborhood.contains(y);
            out.require(in_n == 2, "s* does not have two N-neighbours");
          }
        }
        break;
    }
  }
  std::sort(images.begin(), images.end());
  out.require(std::adjacent_find(images.begin(), images.end()) == images.end(),
              "injection has a collision");
}

}  // namespace

std::vector<std::string> check_trace(const Graph& g, const ConstructionTrace& t) {
  Violations out;
  if (!t.frame) {
    out.require(g.order() == 1 && t.a_hat == VertexSet(1, {0}),
                "frameless trace must be a single vertex mapped to itself");
    return out.list;
  }
  const Frame& f = *t.frame;
  check_frame(g, f, out);

  out.require(!t.a_history.empty() &&
                  std::holds_alternative<InitialStep>(t.a_history.front().step),
              "A history must start with the initial step");
  for (std::size_t i = 0; i < t.a_history.size(); ++i) {
    const auto& a = t.a_history[i].a;
    const auto tag = "A[" + std::to_string(i) + "]";
    out.require(satisfies_endpoint_condition(f, a.members), tag + " violates (i)");
    out.require(satisfies_maximality_condition(g, f, a.members),
                tag + " violates (ii)");
    out.require(x_of(g, f, a.members) == a.x, tag + " caches a stale X");
    if (i > 0) {
      const auto& prev = t.a_history[i - 1].a;
      out.require(a.x.size() < prev.x.size(), tag + " did not shrink |X|");
      out.require(pairs_off(f, prev.members, a.members),
                  tag + " is not a partner swap of its predecessor");
    }
  }
  if (t.a_history.empty()) return out.list;
  const auto& a = t.a_history.back().a.members;
  out.require(t.a_history.back().a.x.empty(), "final X(A) is not empty");

  for (Vertex v : a) out.require(f.neighborhood.contains(v), "A not inside N");
  for (Vertex v : t.s_prime) out.require(f.packing.contains(v), "S' not inside S");
  for (Vertex v : t.z) out.require(t.t.contains(v), "Z not inside T");
  for (Vertex v : t.t) out.require(f.rest.contains(v), "T not inside R");
  for (Vertex v : f.packing) {
    bool dominated = false;
    for (Vertex w : g.neighbors(v)) dominated = dominated || a.contains(w);
    out.require(dominated != t.s_prime.contains(v), "S' is not the undominated S");
  }
  for (Vertex v : f.rest) {
    bool dominated = false;
    for (Vertex w : g.neighbors(v)) dominated = dominated || a.contains(w);
    out.require(dominated != t.t.contains(v), "T is not the undominated R");
  }
  auto gt = induced_subgraph(g, t.t);
  VertexSet local_z(gt.graph.order());
  for (Vertex v : t.z) local_z.insert(*gt.from_parent[v]);
  out.require(is_independent_dominating(gt.graph, local_z),
              "Z is not an independent dominating set of G[T]");

  out.require(disjoint(a, t.s_prime) && disjoint(a, t.z) && disjoint(t.s_prime, t.z),
              "A, S', Z overlap");
  out.require(t.a_hat == set_union(set_union(a, t.s_prime), t.z), "A-hat != A + S' + Z");
  out.require(is_independent_dominating(g, t.a_hat),
              "A-hat is not an independent dominating set");

  std::size_t degree_sum = 0;
  for (Vertex s : f.packing) degree_sum += g.degree(s);
  out.require(f.neighborhood.size() == degree_sum, "|N| != sum of S-degrees");
  out.require(degree_sum <= 3 * f.packing.size(), "sum of S-degrees exceeds 3|S|");
  out.require(t.a_hat.size() == a.size() + t.s_prime.size() + t.z.size(),
              "size decomposition of A-hat");
  out.require(t.a_hat.size() <= 3 * f.packing.size(), "|A-hat| exceeds 3|S|");
  out.require(t.sizes.a_hat == t.a_hat.size() && t.sizes.bound == 3 * f.packing.size(),
              "recorded sizes are stale");
  check_injection(g, f, t, a, out);
  return out.list;
}

std::vector<std::string> check_result(const Graph& g, const ConstructionResult& r) {
  Violations out;
  VertexSet assembled(g.order());
  for (const auto& t : r.components) {
    auto sub = induced_subgraph(g, VertexSet(g.order(), t.component));
    for (auto& v : check_trace(sub.graph, t)) {
      out.list.push_back("component at " + std::to_string(t.component.front()) +
                         ": " + v);
    }
    for (Vertex v : t.a_hat) assembled.insert(t.component[v]);
  }
  out.require(assembled == r.a_hat, "A-hat differs from the union of components");
  out.require(is_independent_dominating(g, r.a_hat),
              "A-hat is not an independent dominating set of G");
  out.require(r.a_hat.size() <= 3 * r.packing.size(), "|A-hat| exceeds 3|S|");
  return out.list;
}

}  // namespace packdom
