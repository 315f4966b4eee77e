#pragma once

#include <cstddef>
#include <limits>
#include <optional>
#include <vector>

#include "pmod/density.hpp"
#include "pmod/graph.hpp"
#include "pmod/walk.hpp"

namespace pmod {

/// A ρ-shortest member of a family together with its ρ-length.
struct ShortestWalk {
  Walk walk;
  double length;
};

/// A family of walks, described by what its shortest-walk oracle searches.
///
/// Families hold vertex ids and (for explicit lists) validated walks, not
/// the graph itself; every query takes the graph, so one family can be
/// reused across graphs that differ only in their weights.
class WalkFamily {
public:
  enum class Kind { connecting, via_vertex, explicit_list };

  /// Gamma(s, t): all walks from s to t. Requires s != t.
  static WalkFamily connecting(const Graph& g, VertexId source, VertexId target);

  /// All walks from `source` to `target` that visit `via` on the way.
  /// Requires the three vertices to be distinct.
  static WalkFamily via_vertex(const Graph& g, VertexId source, VertexId via,
                               VertexId target);

  /// A finite list of walks, deduplicated (first occurrence kept).
  static WalkFamily explicit_list(const Graph& g, std::vector<Walk> walks);

  Kind kind() const noexcept { return kind_; }
  VertexId source() const noexcept { return source_; }
  VertexId via() const noexcept { return via_; }
  VertexId target() const noexcept { return target_; }
  const std::vector<Walk>& walks() const noexcept { return walks_; }

  /// Membership test (endpoints, via-vertex visit, or list lookup).
  bool contains(const Walk& w) const;

private:
  WalkFamily() = default;

  Kind kind_ = Kind::connecting;
  std::size_t vertex_count_ = 0;
  VertexId source_ = 0;
  VertexId via_ = 0;
  VertexId target_ = 0;
  std::vector<Walk> walks_;

  friend void check_compatible(const Graph& g, const WalkFamily& family);
};

/// Throws InputError if the family was built for a graph of a different shape.
void check_compatible(const Graph& g, const WalkFamily& family);

/// A member minimizing the ρ-length, or nullopt for an empty family.
///
/// Connecting families run Dijkstra under weights ρ; via-vertex families
/// concatenate a shortest source->via walk with a shortest via->target walk,
/// which is optimal because members are walks and may repeat edges.
/// Among equal-length candidates the search keeps the first predecessor
/// found while scanning arcs in edge order, so results are deterministic.
/// Throws ParameterError if some ρ(e) < 0.
std::optional<ShortestWalk> shortest_walk(const Graph& g, const WalkFamily& family,
                                          const EdgeDensity& rho);

/// shortest_walk under ρ ≡ 1; the length is the hop count.
std::optional<ShortestWalk> hop_shortest_walk(const Graph& g, const WalkFamily& family);

/// ℓ_ρ(Γ); +infinity for an empty family.
double family_rho_length(const Graph& g, const WalkFamily& family, const EdgeDensity& rho);

inline constexpr double empty_family_length = std::numeric_limits<double>::infinity();

} // namespace pmod
