#pragma once

#include <string>
#include <string_view>

#include "hang/graph.hpp"

namespace hang {

// graph6: one graph per line. A leading ">>graph6<<" is stripped and a
// trailing newline is tolerated. Errors carry the byte offset of the fault.
Graph from_graph6(std::string_view text);
std::string to_graph6(const Graph& g);

// Edge-list text: first non-comment line "n m", then m lines "u v" with
// 0-based identifiers. '#' starts a comment. A comment of the form
// "# labels: a b c" attaches display labels. ParseError offsets are 1-based
// line numbers.
Graph parse_edge_list(std::string_view text);
std::string to_edge_list(const Graph& g);

/// Decodes a single graph written in either format: edge list when the first
/// meaningful line holds two integers, graph6 otherwise.
Graph parse_graph(std::string_view text);

}  // namespace hang
