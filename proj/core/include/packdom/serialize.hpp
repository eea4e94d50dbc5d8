#pragma once

#include <cstddef>
#include <optional>
#include <string>

#ifdef PACKDOM_VENDORED_JSON
#include "json.hpp"
#else
#include <nlohmann/json.hpp>
#endif

#include "packdom/constructor.hpp"
#include "packdom/graph.hpp"
#include "packdom/vertex_set.hpp"

namespace packdom {

using Json = nlohmann::ordered_json;

Json to_json(const VertexSet& s);

/// Trace in input-graph ids (0-based).
Json to_json(const ConstructionTrace& trace);

/// {components: [...], bound, sizes}.
Json to_json(const ConstructionResult& result);

/// Set kinds a certificate may claim.
enum class SetKind { packing, maximal_packing, dominating, independent_dominating };

std::string to_string(SetKind kind);
std::optional<SetKind> parse_set_kind(std::string_view name);

/// {kind, graph_hash, members, flags, bound}. `flags` records each property
/// as recomputed against `g`; `bound` is omitted when not given.
Json make_certificate(const Graph& g, SetKind kind, const VertexSet& members,
                      std::optional<std::size_t> bound = std::nullopt);

/// Recomputes the claimed property of `members` for `kind`.
bool verify_set(const Graph& g, SetKind kind, const VertexSet& members);

}  // namespace packdom
