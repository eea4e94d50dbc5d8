#include "packdom/serialize.hpp"

#include "packdom/io.hpp"
#include "packdom/packing.hpp"

namespace packdom {

namespace {

/// Maps a local vertex id through the trace's component table.
struct Lift {
  const std::vector<Vertex>& component;
  Vertex operator()(Vertex v) const { return component[v]; }
  Json set(const VertexSet& s) const {
    Json out = Json::array();
    for (Vertex v : s) out.push_back(component[v]);
    return out;
  }
  Json seq(const std::vector<Vertex>& vs) const {
    Json out = Json::array();
    for (Vertex v : vs) out.push_back(component[v]);
    return out;
  }
  Json pair(const Edge& e) const { return Json::array({component[e.first], component[e.second]}); }
  Json pairs(const std::vector<Edge>& es) const {
    Json out = Json::array();
    for (const auto& e : es) out.push_back(pair(e));
    return out;
  }
};

Json frame_json(const Frame& f, const Lift& lift) {
  Json out;
  out["S"] = lift.set(f.packing);
  out["N"] = lift.set(f.neighborhood);
  out["R"] = lift.set(f.rest);
  Json cycles = Json::array();
  for (const auto& c : f.cycles) cycles.push_back(lift.seq(c));
  out["cycles"] = cycles;
  Json paths = Json::array();
  for (const auto& p : f.long_paths) paths.push_back(lift.seq(p));
  out["paths"] = paths;
  out["isolated"] = lift.set(f.isolated);
  out["M"] = lift.pairs(f.matching);
  out["W"] = lift.set(f.matched);
  return out;
}

Json step_json(const StepDescriptor& step, const Lift& lift) {
  Json out;
  if (std::holds_alternative<InitialStep>(step)) {
    out["kind"] = "initial";
  } else if (const auto* ps = std::get_if<PathSwapStep>(&step)) {
    out["kind"] = "path-swap";
    out["v"] = lift(ps->v);
    out["w"] = lift(ps->w);
    out["path"] = lift.seq(ps->q_path);
    out["swapped"] = lift.pairs(ps->swapped);
    out["u2"] = lift(ps->u2);
    out["v2"] = lift(ps->v2);
  } else {
    const auto& of = std::get<OrientationFlipStep>(step);
    out["kind"] = "orientation-flip";
    out["arcs"] = lift.pairs(of.arcs);
    out["flipped"] = lift.pairs(of.flips);
    out["eliminations"] = of.eliminations;
    out["loops"] = of.loops;
  }
  return out;
}

const char* target_name(InjectionTarget t) {
  switch (t) {
    case InjectionTarget::neighborhood: return "N";
    case InjectionTarget::s1: return "S1";
    case InjectionTarget::s2: return "S2";
  }
  return "?";
}

Json sizes_json(const SizeAccounting& s) {
  Json out;
  out["A"] = s.a;
  out["S_prime"] = s.s_prime;
  out["Z"] = s.z;
  out["A_hat"] = s.a_hat;
  out["N"] = s.neighborhood;
  out["S"] = s.packing;
  out["bound"] = s.bound;
  out["S_prime_by_degree"] = Json::array(
      {s.s_prime_by_degree[1], s.s_prime_by_degree[2], s.s_prime_by_degree[3]});
  out["S_by_degree"] = Json::array(
      {s.packing_by_degree[1], s.packing_by_degree[2], s.packing_by_degree[3]});
  // |N| + |S1| + |S2| with S_i read over S' and over all of S.
  out["chain_over_S_prime"] = s.neighborhood + s.s_prime_by_degree[1] + s.s_prime_by_degree[2];
  out["chain_over_S"] = s.neighborhood + s.packing_by_degree[1] + s.packing_by_degree[2];
  return out;
}

}  // namespace

Json to_json(const VertexSet& s) {
  Json out = Json::array();
  for (Vertex v : s) out.push_back(v);
  return out;
}

Json to_json(const ConstructionTrace& t) {
  const Lift lift{t.component};
  Json out;
  out["vertices"] = t.component;
  out["frame"] = t.frame ? frame_json(*t.frame, lift) : Json(nullptr);
  Json history = Json::array();
  for (const auto& entry : t.a_history) {
    Json h;
    h["A"] = lift.set(entry.a.members);
    h["X"] = lift.set(entry.a.x);
    h["step"] = step_json(entry.step, lift);
    history.push_back(std::move(h));
  }
  out["a_history"] = std::move(history);
  out["s_prime"] = lift.set(t.s_prime);
  out["t"] = lift.set(t.t);
  out["z"] = lift.set(t.z);
  out["a_hat"] = lift.set(t.a_hat);
  Json inj;
  inj["injective"] = t.injection.injective;
  Json entries = Json::array();
  for (const auto& e : t.injection.entries) {
    entries.push_back(Json::array({lift(e.from), target_name(e.part), lift(e.to)}));
  }
  inj["map"] = std::move(entries);
  inj["unmatched"] = lift.seq(t.injection.unmatched);
  out["injection"] = std::move(inj);
  out["sizes"] = sizes_json(t.sizes);
  out["anomalies"] = t.anomalies;
  return out;
}

Json to_json(const ConstructionResult& r) {
  Json out;
  Json comps = Json::array();
  std::size_t total_s_prime = 0;
  std::size_t total_z = 0;
  std::size_t total_a = 0;
  for (const auto& t : r.components) {
    comps.push_back(to_json(t));
    total_s_prime += t.s_prime.size();
    total_z += t.z.size();
    total_a += t.frame ? t.a_history.back().a.members.size() : 0;
  }
  out["components"] = std::move(comps);
  out["bound"] = 3 * r.packing.size();
  Json sizes;
  sizes["S"] = r.packing.size();
  sizes["A_hat"] = r.a_hat.size();
  sizes["A"] = total_a;
  sizes["S_prime"] = total_s_prime;
  sizes["Z"] = total_z;
  out["sizes"] = std::move(sizes);
  return out;
}

std::string to_string(SetKind kind) {
  switch (kind) {
    case SetKind::packing: return "packing";
    case SetKind::maximal_packing: return "maximal-packing";
    case SetKind::dominating: return "dom";
    case SetKind::independent_dominating: return "idom";
  }
  return "?";
}

std::optional<SetKind> parse_set_kind(std::string_view name) {
  for (auto k : {SetKind::packing, SetKind::maximal_packing, SetKind::dominating,
                 SetKind::independent_dominating}) {
    if (to_string(k) == name) return k;
  }
  return std::nullopt;
}

bool verify_set(const Graph& g, SetKind kind, const VertexSet& members) {
  switch (kind) {
    case SetKind::packing: return is_packing(g, members);
    case SetKind::maximal_packing:
      return is_packing(g, members) && is_maximal_packing(g, members);
    case SetKind::dominating: return is_dominating(g, members);
    case SetKind::independent_dominating: return is_independent_dominating(g, members);
  }
  return false;
}

Json make_certificate(const Graph& g, SetKind kind, const VertexSet& members,
                      std::optional<std::size_t> bound) {
  Json out;
  out["kind"] = to_string(kind);
  out["graph_hash"] = graph_digest(g);
  out["members"] = to_json(members);
  Json flags;
  const bool packing = is_packing(g, members);
  flags["packing"] = packing;
  flags["maximal"] = packing && is_maximal_packing(g, members);
  flags["independent"] = is_independent(g, members);
  flags["dominating"] = is_dominating(g, members);
  out["flags"] = std::move(flags);
  if (bound) out["bound"] = *bound;
  return out;
}

}  // namespace packdom
