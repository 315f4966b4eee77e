#include "shortest_paths.hpp"

#include <algorithm>
#include <functional>
#include <queue>
#include <utility>

namespace pmod::detail {

ShortestPathTree dijkstra(const Graph& g, VertexId source, std::span<const double> weights) {
  const std::size_t n = g.vertex_count();
  constexpr double inf = std::numeric_limits<double>::infinity();
  ShortestPathTree tree{std::vector<double>(n, inf), std::vector<EdgeId>(n, kNoEdge)};
  std::vector<bool> settled(n, false);

  using Item = std::pair<double, VertexId>;
  std::priority_queue<Item, std::vector<Item>, std::greater<>> heap;
  tree.dist[source] = 0.0;
  heap.emplace(0.0, source);
  while (!heap.empty()) {
    const auto [d, v] = heap.top();
    heap.pop();
    if (settled[v]) continue;
    settled[v] = true;
    for (const Arc& arc : g.arcs_from(v)) {
      if (settled[arc.to]) continue;
      const double nd = d + weights[arc.edge];
      if (nd < tree.dist[arc.to]) {
        tree.dist[arc.to] = nd;
        tree.parent_edge[arc.to] = arc.edge;
        heap.emplace(nd, arc.to);
      }
    }
  }
  return tree;
}

std::vector<EdgeId> tree_path(const Graph& g, const ShortestPathTree& tree, VertexId target) {
  std::vector<EdgeId> path;
  VertexId v = target;
  while (tree.parent_edge[v] != kNoEdge) {
    const EdgeId e = tree.parent_edge[v];
    path.push_back(e);
    const Edge& edge = g.edge(e);
    v = (edge.head == v) ? edge.tail : edge.head;
  }
  std::reverse(path.begin(), path.end());
  return path;
}

} // namespace pmod::detail
