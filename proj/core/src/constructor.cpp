#include "packdom/constructor.hpp"

#include <algorithm>
#include <string>

#include "packdom/errors.hpp"
#include "packdom/io.hpp"
#include "packdom/matching.hpp"
#include "packdom/packing.hpp"

namespace packdom {

namespace {

void require_conditions(const Graph& g, const Frame& frame, const VertexSet& a,
                        const char* where) {
  if (!satisfies_endpoint_condition(frame, a)) {
    throw ConsistencyError(std::string(where) +
                           ": A misses an endpoint of a long path of G[N]");
  }
  if (!satisfies_maximality_condition(g, frame, a)) {
    throw ConsistencyError(std::string(where) +
                           ": A is not a maximal independent set of G[N]");
  }
}

std::string describe(const VertexSet& s) {
  std::string out = "{";
  for (Vertex v : s) {
    if (out.size() > 1) out += ",";
    out += std::to_string(v);
  }
  return out + "}";
}

}  // namespace

PathSwapResult path_swap(const Graph& g, const Frame& frame, const ASet& a,
                         const QFrame& qf, Vertex v) {
  if (a.x.empty()) throw ConsistencyError("path swap called with X(A) empty");
  if (v >= g.order() || !qf.q_index[v] || !qf.q_prime.contains(*qf.q_index[v])) {
    throw ConsistencyError("path swap vertex " + std::to_string(v) +
                           " is not in Q'");
  }
  const Vertex qv = *qf.q_index[v];
  if (qf.q.degree(qv) > 2) {
    throw ConsistencyError("path swap vertex " + std::to_string(v) +
                           " has Q'-degree 3");
  }

  // Nearest X(A) vertex by breadth-first search in Q, smallest index first.
  std::vector<std::optional<EdgeId>> parent(qf.q.order());
  std::vector<bool> seen(qf.q.order(), false);
  std::vector<Vertex> frontier{qv};
  seen[qv] = true;
  std::optional<Vertex> target;
  while (!frontier.empty() && !target) {
    for (Vertex x : frontier) {
      if (a.x.contains(qf.q_vertices[x]) && (!target || x < *target)) target = x;
    }
    if (target) break;
    std::vector<Vertex> next;
    for (Vertex x : frontier) {
      for (EdgeId e : qf.q.incident(x)) {
        Vertex y = qf.q.edge(e).other(x);
        if (seen[y]) continue;
        seen[y] = true;
        parent[y] = e;
        next.push_back(y);
      }
    }
    std::sort(next.begin(), next.end());
    frontier = std::move(next);
  }
  if (!target) {
    throw ConsistencyError("no X(A) vertex in the Q-component of " +
                           std::to_string(v));
  }

  PathSwapStep step;
  step.v = v;
  step.w = qf.q_vertices[*target];
  std::vector<EdgeId> path_edges;
  for (Vertex x = *target; x != qv;) {
    EdgeId e = *parent[x];
    path_edges.push_back(e);
    x = qf.q.edge(e).other(x);
  }
  std::reverse(path_edges.begin(), path_edges.end());

  Vertex cur = qv;
  step.q_path.push_back(qf.q_vertices[cur]);
  for (EdgeId e : path_edges) {
    const auto& edge = qf.q.edge(e);
    const auto& wit = qf.witness[e];
    const bool from_u = edge.u == cur;
    step.swapped.emplace_back(from_u ? wit.near_u : wit.near_v,
                              from_u ? wit.near_v : wit.near_u);
    cur = edge.other(cur);
    step.q_path.push_back(qf.q_vertices[cur]);
  }

  std::optional<Vertex> u2;
  for (Vertex u : g.neighbors(v)) {
    if (!frame.matched.contains(u)) continue;
    Vertex p = *frame.partner[u];
    if (!qf.q_index[*frame.packing_neighbor[p]]) {
      u2 = u;
      break;
    }
  }
  if (!u2) {
    throw ConsistencyError("vertex " + std::to_string(v) +
                           " has Q'-degree at most 2 but every matched "
                           "neighbour's partner touches X(N \\ W)");
  }
  step.u2 = *u2;
  step.v2 = *frame.partner[*u2];

  VertexSet next = a.members;
  next.erase(step.v2);
  for (auto [x, y] : step.swapped) next.erase(x);
  next.insert(step.u2);
  for (auto [x, y] : step.swapped) next.insert(y);

  ASet out = make_aset(g, frame, std::move(next));
  require_conditions(g, frame, out.members, "path swap");
  auto expected = a.x;
  expected.erase(step.w);
  if (out.x != expected) {
    throw ConsistencyError("path swap at " + std::to_string(v) + " produced X = " +
                           describe(out.x) + ", expected " + describe(expected));
  }
  return {std::move(out), std::move(step)};
}

OrientationFlipResult orientation_flip(const Graph& g, const Frame& frame,
                                       const ASet& a, const QFrame& qf) {
  OrientationFlipResult out{a, {}};
  if (qf.q_prime.empty()) return out;

  std::vector<std::optional<Vertex>> local(qf.q.order());
  Vertex next_local = 0;
  for (Vertex qv : qf.q_prime) {
    if (qf.q.degree(qv) != 3) {
      throw ConsistencyError("Q' is not cubic at " +
                             std::to_string(qf.q_vertices[qv]));
    }
    local[qv] = next_local++;
  }
  Multigraph sub(qf.q_prime.size());
  std::vector<EdgeId> q_edge_of;
  for (const auto& e : qf.q.edges()) {
    if (!local[e.u]) continue;
    sub.add_edge(*local[e.u], *local[e.v], e.tag);
    q_edge_of.push_back(e.id);
    if (e.is_loop()) ++out.step.loops;
  }

  auto oriented = orient_no_sources(sub);
  out.step.eliminations = oriented.steps.size();
  VertexSet members = a.members;
  for (EdgeId le = 0; le < sub.size(); ++le) {
    const EdgeId qe = q_edge_of[le];
    const auto& wit = qf.witness[qe];
    const bool fwd = oriented.orientation.forward(le);
    const Vertex removed = fwd ? wit.near_u : wit.near_v;
    const Vertex inserted = fwd ? wit.near_v : wit.near_u;
    const auto& edge = qf.q.edge(qe);
    const Vertex tail = fwd ? edge.u : edge.v;
    const Vertex head = fwd ? edge.v : edge.u;
    out.step.arcs.emplace_back(qf.q_vertices[tail], qf.q_vertices[head]);
    out.step.flips.emplace_back(removed, inserted);
    members.erase(removed);
    members.insert(inserted);
  }

  out.a = make_aset(g, frame, std::move(members));
  require_conditions(g, frame, out.a.members, "orientation flip");
  if (!out.a.x.empty()) {
    throw ConsistencyError("orientation flip left X = " + describe(out.a.x));
  }
  return out;
}

MinimizeResult minimize_x(const Graph& g, const Frame& frame, const ASet& a) {
  MinimizeResult out{a, {}};
  const std::size_t budget = a.x.size();
  while (!out.a.x.empty()) {
    if (out.steps.size() >= budget) {
      throw ConsistencyError("improvement loop exceeded |X(initial A)| steps");
    }
    const std::size_t before = out.a.x.size();
    auto qf = build_q(g, frame, out.a);
    std::optional<Vertex> low;
    for (Vertex qv : qf.q_prime) {
      if (qf.q.degree(qv) <= 2) {
        low = qf.q_vertices[qv];
        break;
      }
    }
    if (low) {
      auto r = path_swap(g, frame, out.a, qf, *low);
      out.a = std::move(r.a);
      out.steps.push_back({out.a, std::move(r.step)});
    } else {
      auto r = orientation_flip(g, frame, out.a, qf);
      out.a = std::move(r.a);
      out.steps.push_back({out.a, std::move(r.step)});
    }
    if (out.a.x.size() >= before) {
      throw ConsistencyError("improvement step did not shrink X(A)");
    }
  }
  return out;
}

SizeInjection size_injection(const Graph& g, const Frame& frame,
                             const ConstructionTrace& trace) {
  SizeInjection inj;
  const VertexSet& a = trace.a_history.back().a.members;
  for (Vertex x : a) inj.entries.push_back({x, InjectionTarget::neighborhood, x});

  // Vertices needing a partner in N \ A, in increasing id.
  std::vector<Vertex> left;
  std::vector<std::vector<Vertex>> options;
  for (Vertex s : trace.s_prime) {
    const auto d = g.degree(s);
    if (d == 1 || d == 2) {
      inj.entries.push_back(
          {s, d == 1 ? InjectionTarget::s1 : InjectionTarget::s2, s});
      continue;
    }
    std::vector<Vertex> targets;
    for (Vertex x : g.neighbors(s)) {
      std::size_t in_n = 0;
      for (Vertex y : g.neighbors(x)) in_n += frame.neighborhood.contains(y) ? 1 : 0;
      if (in_n == 2) targets.push_back(x);
    }
    left.push_back(s);
    options.push_back(std::move(targets));
  }
  for (Vertex r : trace.z) {
    std::vector<Vertex> targets;
    for (Vertex x : g.neighbors(r)) {
      if (frame.neighborhood.contains(x)) targets.push_back(x);
    }
    left.push_back(r);
    options.push_back(std::move(targets));
  }

  const auto free_n = set_difference(frame.neighborhood, a);
  std::vector<std::optional<std::size_t>> right_index(g.order());
  for (std::size_t i = 0; i < free_n.size(); ++i) right_index[free_n.vector()[i]] = i;

  BipartiteMatcher matcher(left.size(), free_n.size());
  for (std::size_t l = 0; l < left.size(); ++l) {
    for (Vertex x : options[l]) {
      if (right_index[x]) matcher.add_edge(l, *right_index[x]);
    }
  }
  matcher.solve();
  for (std::size_t l = 0; l < left.size(); ++l) {
    if (auto r = matcher.mate_of_left(l)) {
      inj.entries.push_back(
          {left[l], InjectionTarget::neighborhood, free_n.vector()[*r]});
    } else {
      inj.unmatched.push_back(left[l]);
    }
  }
  std::sort(inj.entries.begin(), inj.entries.end(),
            [](const InjectionEntry& x, const InjectionEntry& y) { return x.from < y.from; });

  std::vector<std::pair<int, Vertex>> images;
  for (const auto& e : inj.entries) images.emplace_back(static_cast<int>(e.part), e.to);
  std::sort(images.begin(), images.end());
  const bool distinct = std::adjacent_find(images.begin(), images.end()) == images.end();
  inj.injective = distinct && inj.unmatched.empty() &&
                  inj.entries.size() == trace.a_hat.size();
  return inj;
}

ConstructionTrace finalize(const Graph& g, const Frame& frame,
                           std::vector<AHistoryEntry> history) {
  if (history.empty()) throw ConsistencyError("finalize needs an A history");
  const ASet& a = history.back().a;
  if (!a.x.empty()) throw ConsistencyError("finalize called with X(A) nonempty");

  ConstructionTrace t;
  t.a_history = std::move(history);
  auto has_a_neighbor = [&](Vertex v) {
    auto nb = g.neighbors(v);
    return std::any_of(nb.begin(), nb.end(),
                       [&](Vertex w) { return a.members.contains(w); });
  };
  t.s_prime = VertexSet(g.order());
  for (Vertex s : frame.packing) {
    if (!has_a_neighbor(s)) t.s_prime.insert(s);
  }
  t.t = VertexSet(g.order());
  for (Vertex r : frame.rest) {
    if (!has_a_neighbor(r)) t.t.insert(r);
  }
  auto gt = induced_subgraph(g, t.t);
  auto local_z = greedy_maximal_independent_set(gt.graph, std::uint64_t{0});
  t.z = VertexSet(g.order());
  for (Vertex x : local_z) t.z.insert(gt.to_parent[x]);

  if (!disjoint(a.members, t.s_prime) || !disjoint(a.members, t.z) ||
      !disjoint(t.s_prime, t.z)) {
    throw ConsistencyError("A, S' and Z are not pairwise disjoint");
  }
  t.a_hat = set_union(set_union(a.members, t.s_prime), t.z);
  if (!is_independent_dominating(g, t.a_hat)) {
    throw ConsistencyError("A-hat is not an independent dominating set");
  }

  auto& sz = t.sizes;
  sz.a = a.members.size();
  sz.s_prime = t.s_prime.size();
  sz.z = t.z.size();
  sz.a_hat = t.a_hat.size();
  sz.neighborhood = frame.neighborhood.size();
  sz.packing = frame.packing.size();
  sz.bound = 3 * frame.packing.size();
  for (Vertex s : t.s_prime) ++sz.s_prime_by_degree[g.degree(s)];
  for (Vertex s : frame.packing) ++sz.packing_by_degree[g.degree(s)];
  if (sz.a_hat > sz.bound) {
    throw ConsistencyError("|A-hat| = " + std::to_string(sz.a_hat) +
                           " exceeds 3|S| = " + std::to_string(sz.bound));
  }

  t.injection = size_injection(g, frame, t);
  if (!t.injection.injective) {
    t.anomalies.push_back("size injection: no distinct N-target for " +
                          std::to_string(t.injection.unmatched.size()) +
                          " vertices of S3 or Z");
  } else if (sz.a_hat > sz.neighborhood + sz.s_prime_by_degree[1] +
                            sz.s_prime_by_degree[2]) {
    throw ConsistencyError("injective map but |A-hat| > |N| + |S1| + |S2|");
  }
  return t;
}

ConstructionResult construct(const Graph& g, const VertexSet& s) {
  if (s.universe() != g.order()) {
    throw InvalidInput("packing universe does not match graph order");
  }
  if (g.max_degree() > 3) {
    throw InvalidInput("graph is not subcubic (max degree " +
                       std::to_string(g.max_degree()) + ")");
  }
  if (!is_maximal_packing(g, s)) throw InvalidInput("set is not a maximal packing");

  ConstructionResult result;
  result.packing = s;
  result.a_hat = VertexSet(g.order());
  for (const auto& block : components(g)) {
    ConstructionTrace trace;
    trace.component = block;
    if (block.size() == 1) {
      trace.a_hat = VertexSet(1, {0});
      trace.injection.injective = true;
      trace.sizes.a_hat = 1;
      trace.sizes.packing = 1;
      trace.sizes.bound = 3;
      result.a_hat.insert(block[0]);
      result.components.push_back(std::move(trace));
      continue;
    }
    auto sub = induced_subgraph(g, VertexSet(g.order(), block));
    VertexSet local_s(block.size());
    for (Vertex v : s) {
      if (sub.from_parent[v]) local_s.insert(*sub.from_parent[v]);
    }
    try {
      Frame frame = build_frame(sub.graph, local_s);
      ASet a0 = initial_a(sub.graph, frame);
      std::vector<AHistoryEntry> history{{a0, InitialStep{}}};
      auto improved = minimize_x(sub.graph, frame, a0);
      for (auto& step : improved.steps) history.push_back(std::move(step));
      trace = finalize(sub.graph, frame, std::move(history));
      trace.frame = std::move(frame);
      trace.component = block;
    } catch (const ConsistencyError& e) {
      std::string dump = format_dimacs(sub.graph) + "c packing";
      for (Vertex v : local_s) dump += " " + std::to_string(v);
      throw ConsistencyError(e.what(), dump + "\n");
    }
    for (Vertex v : trace.a_hat) result.a_hat.insert(block[v]);
    result.components.push_back(std::move(trace));
  }
  if (!is_independent_dominating(g, result.a_hat)) {
    throw ConsistencyError("assembled A-hat is not an independent dominating set");
  }
  if (result.a_hat.size() > 3 * s.size()) {
    throw ConsistencyError("assembled A-hat exceeds 3|S|");
  }
  return result;
}

}  // namespace packdom
