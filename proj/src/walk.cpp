#include "pmod/walk.hpp"

#include <string>

#include "pmod/errors.hpp"

namespace pmod {

Walk Walk::from_edges(const Graph& g, VertexId start, std::vector<EdgeId> edges) {
  if (edges.empty()) throw InputError("a walk traverses at least one edge");
  if (start >= g.vertex_count()) throw InputError("walk starts at an unknown vertex");
  std::vector<VertexId> vertices{start};
  vertices.reserve(edges.size() + 1);
  for (std::size_t i = 0; i < edges.size(); ++i) {
    if (edges[i] >= g.edge_count()) {
      throw InputError("walk uses unknown edge id " + std::to_string(edges[i]));
    }
    auto next = g.traverse(edges[i], vertices.back());
    if (!next) {
      throw InputError("walk step " + std::to_string(i + 1) + ": edge " +
                       g.edge_key(edges[i]) + " cannot be traversed from '" +
                       g.label(vertices.back()) + "'");
    }
    vertices.push_back(*next);
  }
  return Walk(std::move(vertices), std::move(edges));
}

Walk Walk::from_vertices(const Graph& g, std::span<const VertexId> vertices) {
  if (vertices.size() < 2) throw InputError("a walk traverses at least one edge");
  std::vector<EdgeId> edges;
  edges.reserve(vertices.size() - 1);
  for (std::size_t i = 0; i + 1 < vertices.size(); ++i) {
    if (vertices[i] >= g.vertex_count() || vertices[i + 1] >= g.vertex_count()) {
      throw InputError("walk visits an unknown vertex");
    }
    auto e = g.find_edge(vertices[i], vertices[i + 1]);
    if (!e) {
      throw InputError("no edge from '" + g.label(vertices[i]) + "' to '" +
                       g.label(vertices[i + 1]) + "'");
    }
    edges.push_back(*e);
  }
  return Walk({vertices.begin(), vertices.end()}, std::move(edges));
}

Walk Walk::then(const Walk& tail) const {
  if (tail.start() != end()) throw InputError("walks do not chain");
  std::vector<VertexId> vertices(vertices_);
  vertices.insert(vertices.end(), tail.vertices_.begin() + 1, tail.vertices_.end());
  std::vector<EdgeId> edges(edges_);
  edges.insert(edges.end(), tail.edges_.begin(), tail.edges_.end());
  return Walk(std::move(vertices), std::move(edges));
}

double rho_length(const Walk& walk, const EdgeDensity& rho) {
  double length = 0.0;
  for (EdgeId e : walk.edges()) {
    if (e >= rho.size()) {
      throw InputError("edge id " + std::to_string(e) + " outside the density");
    }
    length += rho[e];
  }
  return length;
}

} // namespace pmod
