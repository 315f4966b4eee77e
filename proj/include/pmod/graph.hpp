#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace pmod {

using VertexId = std::uint32_t;
using EdgeId = std::uint32_t;

struct Edge {
  VertexId tail;
  VertexId head;
};

/// One way of leaving a vertex along an edge.
struct Arc {
  EdgeId edge;
  VertexId to;
};

/// A finite simple graph with positive edge weights sigma.
///
/// Edges keep the order they were given in; every per-edge vector in the
/// library (densities, weights, usage rows) is indexed by that order.
/// Undirected edges are stored once and may be traversed either way.
class Graph {
public:
  /// Throws InputError on nonpositive or non-finite weights, duplicate
  /// edges, self-loops, unknown endpoints, duplicate labels or n == 0.
  Graph(bool directed, std::vector<std::string> labels, std::vector<Edge> edges,
        std::vector<double> sigma);

  bool directed() const noexcept { return directed_; }
  std::size_t vertex_count() const noexcept { return labels_.size(); }
  std::size_t edge_count() const noexcept { return edges_.size(); }

  const std::string& label(VertexId v) const { return labels_.at(v); }
  std::span<const std::string> labels() const noexcept { return labels_; }
  std::optional<VertexId> find_vertex(std::string_view label) const;
  /// Like find_vertex but throws InputError("unknown vertex ...").
  VertexId vertex(std::string_view label) const;

  const Edge& edge(EdgeId e) const { return edges_.at(e); }
  std::span<const Edge> edges() const noexcept { return edges_; }

  double sigma(EdgeId e) const { return sigma_.at(e); }
  std::span<const double> sigma() const noexcept { return sigma_; }
  double sigma_min() const noexcept { return sigma_min_; }
  double sigma_total() const noexcept { return sigma_total_; }

  /// Arcs leaving v, in increasing edge order.
  std::span<const Arc> arcs_from(VertexId v) const;

  /// Edge traversable from `from` to `to`, if any.
  std::optional<EdgeId> find_edge(VertexId from, VertexId to) const;

  /// Vertex reached by traversing e starting at `from`; nullopt if e
  /// cannot be traversed from there.
  std::optional<VertexId> traverse(EdgeId e, VertexId from) const;

  /// Same topology, new weights.
  Graph with_sigma(std::vector<double> sigma) const;

  /// "tail,head" with vertex labels.
  std::string edge_key(EdgeId e) const;

  friend bool operator==(const Graph& a, const Graph& b);

private:
  static std::uint64_t pair_key(VertexId a, VertexId b) noexcept {
    return (std::uint64_t{a} << 32) | b;
  }

  bool directed_;
  std::vector<std::string> labels_;
  std::vector<Edge> edges_;
  std::vector<double> sigma_;
  double sigma_min_ = 0.0;
  double sigma_total_ = 0.0;
  std::unordered_map<std::string, VertexId> index_;
  std::unordered_map<std::uint64_t, EdgeId> pairs_;
  std::vector<std::size_t> arc_offsets_;
  std::vector<Arc> arcs_;
};

} // namespace pmod
