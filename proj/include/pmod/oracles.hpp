#pragma once

#include <optional>
#include <vector>

#include "pmod/graph.hpp"

namespace pmod {

/// Breadth-first hop distance from s to t; nullopt if t is unreachable.
/// Throws InputError for unknown vertices or s == t.
std::optional<std::size_t> shortest_hops(const Graph& g, VertexId s, VertexId t);

/// Effective conductance between s and t of the resistor network with
/// conductances σ: the power of the potential with φ(s) = 0, φ(t) = 1.
/// Throws UnsupportedOperation on directed graphs and InputError when s
/// and t lie in different components.
double effective_conductance(const Graph& g, VertexId s, VertexId t);

/// The harmonic potential behind effective_conductance (φ(s) = 0,
/// φ(t) = 1); vertices outside the s–t component get NaN.
std::vector<double> harmonic_potential(const Graph& g, VertexId s, VertexId t);

struct FlowResult {
  double value = 0.0;
  /// Edges crossing from the source side of a minimum cut.
  std::vector<EdgeId> cut_edges;
};

/// Maximum s–t flow with capacities σ by shortest augmenting paths.
/// Undirected edges become two opposed arcs sharing one capacity.
/// The returned cut is checked to disconnect s from t.
FlowResult max_flow_min_cut(const Graph& g, VertexId s, VertexId t);

/// True if removing `edges` leaves no walk from s to t.
bool disconnects(const Graph& g, const std::vector<EdgeId>& edges, VertexId s, VertexId t);

} // namespace pmod
