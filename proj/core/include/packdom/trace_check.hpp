#pragma once

#include <string>
#include <vector>

#include "packdom/constructor.hpp"
#include "packdom/graph.hpp"

namespace packdom {

/// Re-derives every invariant a trace claims from scratch: the frame
/// partition, conditions on each successive A, strict decrease of |X|, the
/// final X = {}, independence and domination of A-hat, the part structure,
/// the injection, and the size chain. Returns human-readable violations;
/// empty means the trace checks out. `component_graph` is the graph on the
/// trace's local ids.
std::vector<std::string> check_trace(const Graph& component_graph,
                                     const ConstructionTrace& trace);

/// Applies check_trace to each component and checks the assembled A-hat
/// against the whole graph.
std::vector<std::string> check_result(const Graph& g,
                                      const ConstructionResult& result);

}  // namespace packdom
