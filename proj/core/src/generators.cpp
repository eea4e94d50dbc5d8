#include "packdom/generators.hpp"

#include <algorithm>
#include <bit>
#include <charconv>
#include <map>
#include <mutex>
#include <string>

#include "packdom/canonical.hpp"
#include "packdom/errors.hpp"
#include "packdom/random.hpp"

namespace packdom {

Graph cycle_graph(std::size_t n) {
  if (n < 3) throw InvalidInput("a cycle needs at least three vertices");
  Graph g(n);
  for (Vertex v = 0; v < n; ++v) g.add_edge(v, static_cast<Vertex>((v + 1) % n));
  return g;
}

Graph path_graph(std::size_t n) {
  Graph g(n);
  for (Vertex v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
  return g;
}

Graph complete_bipartite(std::size_t a, std::size_t b) {
  Graph g(a + b);
  for (Vertex u = 0; u < a; ++u) {
    for (Vertex v = 0; v < b; ++v) g.add_edge(u, static_cast<Vertex>(a + v));
  }
  return g;
}

namespace {

Graph eight_cycle_with(std::initializer_list<Edge> chords) {
  Graph g = cycle_graph(8);
  for (auto [u, v] : chords) g.add_edge(u, v);
  return g;
}

Graph petersen() {
  Graph g(10);
  for (Vertex i = 0; i < 5; ++i) {
    g.add_edge(i, (i + 1) % 5);
    g.add_edge(i, i + 5);
    g.add_edge(i + 5, (i + 2) % 5 + 5);
  }
  return g;
}

std::optional<std::size_t> suffix_number(std::string_view name, std::string_view prefix) {
  if (!name.starts_with(prefix) || name.size() == prefix.size()) return std::nullopt;
  std::size_t n = 0;
  auto tail = name.substr(prefix.size());
  auto [ptr, ec] = std::from_chars(tail.data(), tail.data() + tail.size(), n);
  if (ec != std::errc{} || ptr != tail.data() + tail.size()) return std::nullopt;
  return n;
}

}  // namespace

Graph named(std::string_view name) {
  if (name == "h1") return eight_cycle_with({{0, 5}, {1, 3}, {2, 6}, {4, 7}});
  if (name == "h2" || name == "wagner") {
    return eight_cycle_with({{0, 4}, {1, 5}, {2, 6}, {3, 7}});
  }
  if (name == "h3" || name == "petersen") return petersen();
  if (name == "k33") return complete_bipartite(3, 3);
  for (auto prefix : {"cycle", "c"}) {
    if (auto n = suffix_number(name, prefix)) return cycle_graph(*n);
  }
  for (auto prefix : {"path", "p"}) {
    if (auto n = suffix_number(name, prefix)) return path_graph(*n);
  }
  throw InvalidInput("unknown graph name `" + std::string(name) + "`");
}

const std::vector<std::string>& tight_catalog() {
  static const std::vector<std::string> names{"h1", "wagner", "petersen", "k33"};
  return names;
}

std::optional<std::string> identify(const Graph& g) {
  if (g.order() > kMaxCanonicalOrder) return std::nullopt;
  for (const auto& name : tight_catalog()) {
    if (isomorphic(g, named(name))) return name;
  }
  return std::nullopt;
}

Graph random_connected_bounded_degree(std::size_t n, std::size_t max_degree,
                                      std::uint64_t seed) {
  if (n == 0) throw InvalidInput("random graph needs at least one vertex");
  if (n > 2 && max_degree < 2) {
    throw InvalidInput("a connected graph on more than two vertices needs degree 2");
  }
  Rng rng(seed);
  std::vector<Vertex> perm(n);
  for (Vertex v = 0; v < n; ++v) perm[v] = v;
  rng.shuffle(perm);

  Graph g(n);
  std::vector<Vertex> open;
  for (std::size_t i = 1; i < n; ++i) {
    open.clear();
    for (std::size_t j = 0; j < i; ++j) {
      if (g.degree(perm[j]) < max_degree) open.push_back(perm[j]);
    }
    g.add_edge(perm[i], open[rng.below(open.size())]);
  }
  const auto attempts = rng.below(n + 1);
  for (std::uint64_t k = 0; k < attempts; ++k) {
    const auto u = static_cast<Vertex>(rng.below(n));
    const auto v = static_cast<Vertex>(rng.below(n));
    if (u == v || g.adjacent(u, v)) continue;
    if (g.degree(u) >= max_degree || g.degree(v) >= max_degree) continue;
    g.add_edge(u, v);
  }
  return g;
}

namespace {

struct Level {
  std::vector<Graph> graphs;
};

std::mutex enumeration_mutex;
std::vector<Level> enumeration_cache;  // index n holds graphs on n vertices

void extend_cache(std::size_t n) {
  if (enumeration_cache.empty()) {
    enumeration_cache.resize(2);
    enumeration_cache[1].graphs.push_back(Graph(1));
  }
  while (enumeration_cache.size() <= n) {
    const std::size_t k = enumeration_cache.size();  // new order
    std::map<CanonicalForm, Graph> found;
    for (const auto& base : enumeration_cache[k - 1].graphs) {
      std::vector<Vertex> open;
      for (Vertex v = 0; v < base.order(); ++v) {
        if (base.degree(v) < 3) open.push_back(v);
      }
      const std::size_t count = open.size();
      for (std::uint32_t mask = 1; mask < (1U << count); ++mask) {
        if (std::popcount(mask) > 3) continue;
        Graph g(k);
        for (auto [u, v] : base.edges()) g.add_edge(u, v);
        for (std::size_t i = 0; i < count; ++i) {
          if (mask & (1U << i)) g.add_edge(open[i], static_cast<Vertex>(k - 1));
        }
        auto form = canonical_form(g);
        if (!found.contains(form)) found.emplace(form, canonical_graph(g));
      }
    }
    Level level;
    for (auto& [form, g] : found) level.graphs.push_back(std::move(g));
    enumeration_cache.push_back(std::move(level));
  }
}

}  // namespace

std::vector<Graph> enumerate_connected_subcubic(std::size_t n) {
  if (n > kMaxEnumerationOrder) {
    throw GuardExceeded("enumeration supports at most " +
                        std::to_string(kMaxEnumerationOrder) + " vertices");
  }
  if (n == 0) return {};
  std::lock_guard lock(enumeration_mutex);
  extend_cache(n);
  return enumeration_cache[n].graphs;
}

Multigraph random_multigraph_min2(std::size_t n, std::size_t m, std::uint64_t seed) {
  if (n == 0) throw InvalidInput("multigraph needs at least one vertex");
  if (m < n) {
    throw InvalidInput("a connected multigraph with minimum degree 2 needs m >= n");
  }
  Rng rng(seed);
  std::vector<Vertex> perm(n);
  for (Vertex v = 0; v < n; ++v) perm[v] = v;
  rng.shuffle(perm);
  Multigraph g(n);
  if (n == 1) {
    g.add_edge(0, 0);
  } else if (n == 2) {
    g.add_edge(perm[0], perm[1]);
    g.add_edge(perm[1], perm[0]);
  } else {
    for (std::size_t i = 0; i < n; ++i) g.add_edge(perm[i], perm[(i + 1) % n]);
  }
  for (std::size_t k = n; k < m; ++k) {
    const auto u = static_cast<Vertex>(rng.below(n));
    const auto v = static_cast<Vertex>(rng.below(n));
    g.add_edge(u, v);
  }
  return g;
}

void for_each_multigraph_min2(std::size_t n, std::size_t m,
                              const std::function<bool(const Multigraph&)>& visit) {
  if (n == 0) return;
  std::vector<std::pair<Vertex, Vertex>> kinds;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u; v < n; ++v) kinds.emplace_back(u, v);
  }
  std::vector<std::size_t> pick(m, 0);
  bool keep_going = true;
  auto emit = [&] {
    std::vector<std::size_t> degree(n, 0);
    for (std::size_t k : pick) {
      degree[kinds[k].first] += 1;
      degree[kinds[k].second] += 1;
    }
    if (std::any_of(degree.begin(), degree.end(), [](std::size_t d) { return d < 2; })) {
      return;
    }
    Multigraph g(n);
    for (std::size_t k : pick) g.add_edge(kinds[k].first, kinds[k].second);
    if (is_connected(g)) keep_going = visit(g);
  };
  // Nondecreasing sequences over `kinds` enumerate edge multisets.
  auto rec = [&](auto&& self, std::size_t pos, std::size_t from) -> void {
    if (!keep_going) return;
    if (pos == m) {
      emit();
      return;
    }
    for (std::size_t k = from; k < kinds.size() && keep_going; ++k) {
      pick[pos] = k;
      self(self, pos + 1, k);
    }
  };
  rec(rec, 0, 0);
}

}  // namespace packdom
