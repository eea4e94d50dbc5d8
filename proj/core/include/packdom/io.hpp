#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include "packdom/graph.hpp"
#include "packdom/multigraph.hpp"
#include "packdom/orientation.hpp"
#include "packdom/vertex_set.hpp"

namespace packdom {

// DIMACS-like text: `c` comment lines, one `p edge <n> <m>` header, then m
// lines `e <u> <v>` with 1-based endpoints. Parse errors throw InvalidInput.

Graph parse_dimacs(std::string_view text);
std::string format_dimacs(const Graph& g);

/// Same format; duplicate edges and `e v v` loops are allowed.
Multigraph parse_dimacs_multigraph(std::string_view text);
std::string format_dimacs(const Multigraph& m);

/// `p arc <n> <m>` followed by `a <u> <v>` (1-based, u -> v), in edge-id order.
std::string format_arcs(const Orientation& d);
/// Parses an arc file back into an orientation of the multigraph it spells.
Orientation parse_arcs(std::string_view text);

/// graph6, with or without a `>>graph6<<` header, for simple graphs.
Graph parse_graph6(std::string_view line);
std::string format_graph6(const Graph& g);

/// Accepts DIMACS or graph6, deciding by the presence of DIMACS line prefixes.
Graph parse_graph(std::string_view text);

/// Vertex set text: either whitespace-separated 0-based indices (lines
/// starting with `c` or `#` are comments), or a JSON object whose "members"
/// array holds 0-based indices, as written by the certificate serializer.
VertexSet parse_vertex_set(std::string_view text, std::size_t universe);

/// 64-bit FNV-1a of the DIMACS text, as 16 lowercase hex digits.
std::string graph_digest(const Graph& g);
std::string content_digest(std::string_view bytes);

std::string read_file(const std::string& path);
void write_file(const std::string& path, std::string_view contents);

}  // namespace packdom
