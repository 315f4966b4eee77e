#pragma once

#include <limits>
#include <optional>
#include <span>
#include <vector>

#include "pmod/graph.hpp"

namespace pmod::detail {

inline constexpr EdgeId kNoEdge = std::numeric_limits<EdgeId>::max();

struct ShortestPathTree {
  std::vector<double> dist;        // +inf when unreachable
  std::vector<EdgeId> parent_edge; // kNoEdge at the root / unreachable
};

/// Single-source Dijkstra with nonnegative edge weights. Vertices are
/// settled in (distance, id) order and a predecessor is replaced only on
/// strict improvement, which makes the tree independent of heap internals.
ShortestPathTree dijkstra(const Graph& g, VertexId source, std::span<const double> weights);

/// Edge ids along the tree path source -> target (empty if unreachable or
/// target == source).
std::vector<EdgeId> tree_path(const Graph& g, const ShortestPathTree& tree, VertexId target);

} // namespace pmod::detail
