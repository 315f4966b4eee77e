#pragma once

#include <string>
#include <string_view>

#include "pmod/graph.hpp"

namespace pmod {

enum class GraphFormat { json, edgelist };

/// Parses a graph document. JSON: {"directed": bool, "vertices": [labels],
/// "edges": [{"tail", "head", "sigma"?}]}. Edge list: a `directed` or
/// `undirected` header, then `tail head [sigma]` per line, `#` comments.
/// Missing weights default to 1. Throws InputError with a location.
Graph parse_graph(std::string_view text, GraphFormat format);

GraphFormat parse_format(std::string_view name);

/// Round-trips through parse_graph: same labels, edge order and bit-equal
/// weights. The edge-list form cannot express isolated vertices and throws
/// InputError for them.
std::string serialize_graph(const Graph& g, GraphFormat format);

} // namespace pmod
