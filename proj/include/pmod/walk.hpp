#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "pmod/density.hpp"
#include "pmod/graph.hpp"

namespace pmod {

/// A walk of at least one hop. Validated against a graph at construction
/// and immutable afterwards.
class Walk {
public:
  /// Edge string starting at `start`. Directed edges must be traversed
  /// tail to head. Throws InputError if the edges do not chain.
  static Walk from_edges(const Graph& g, VertexId start, std::vector<EdgeId> edges);

  /// Vertex string v1 v2 ... v(r+1); consecutive vertices must be adjacent.
  static Walk from_vertices(const Graph& g, std::span<const VertexId> vertices);

  VertexId start() const noexcept { return vertices_.front(); }
  VertexId end() const noexcept { return vertices_.back(); }
  std::span<const EdgeId> edges() const noexcept { return edges_; }
  std::span<const VertexId> vertices() const noexcept { return vertices_; }
  /// Graph length l(gamma).
  std::size_t hops() const noexcept { return edges_.size(); }

  /// Concatenation; `tail` must start where this walk ends.
  Walk then(const Walk& tail) const;

  friend bool operator==(const Walk&, const Walk&) = default;
  friend auto operator<=>(const Walk&, const Walk&) = default;

private:
  Walk(std::vector<VertexId> vertices, std::vector<EdgeId> edges)
      : vertices_(std::move(vertices)), edges_(std::move(edges)) {}

  std::vector<VertexId> vertices_;
  std::vector<EdgeId> edges_;
};

/// Sum of rho over the walk's edges, counting repeats.
/// Throws InputError if an edge id is outside rho.
double rho_length(const Walk& walk, const EdgeDensity& rho);

} // namespace pmod
