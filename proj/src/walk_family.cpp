#include "pmod/walk_family.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "pmod/errors.hpp"
#include "shortest_paths.hpp"

namespace pmod {
namespace {

void require_vertex(const Graph& g, VertexId v) {
  if (v >= g.vertex_count()) throw InputError("family refers to an unknown vertex");
}

std::optional<Walk> shortest_between(const Graph& g, VertexId from, VertexId to,
                                     std::span<const double> weights) {
  const auto tree = detail::dijkstra(g, from, weights);
  if (!std::isfinite(tree.dist[to])) return std::nullopt;
  return Walk::from_edges(g, from, detail::tree_path(g, tree, to));
}

std::optional<ShortestWalk> search(const Graph& g, const WalkFamily& family,
                                   std::span<const double> weights) {
  switch (family.kind()) {
  case WalkFamily::Kind::connecting: {
    auto w = shortest_between(g, family.source(), family.target(), weights);
    if (!w) return std::nullopt;
    double len = 0.0;
    for (EdgeId e : w->edges()) len += weights[e];
    return ShortestWalk{std::move(*w), len};
  }
  case WalkFamily::Kind::via_vertex: {
    auto first = shortest_between(g, family.source(), family.via(), weights);
    if (!first) return std::nullopt;
    auto second = shortest_between(g, family.via(), family.target(), weights);
    if (!second) return std::nullopt;
    Walk w = first->then(*second);
    double len = 0.0;
    for (EdgeId e : w.edges()) len += weights[e];
    return ShortestWalk{std::move(w), len};
  }
  case WalkFamily::Kind::explicit_list: {
    const Walk* best = nullptr;
    double best_len = 0.0;
    for (const Walk& w : family.walks()) {
      double len = 0.0;
      for (EdgeId e : w.edges()) len += weights[e];
      if (best == nullptr || len < best_len) {
        best = &w;
        best_len = len;
      }
    }
    if (best == nullptr) return std::nullopt;
    return ShortestWalk{*best, best_len};
  }
  }
  return std::nullopt;
}

} // namespace

WalkFamily WalkFamily::connecting(const Graph& g, VertexId source, VertexId target) {
  require_vertex(g, source);
  require_vertex(g, target);
  if (source == target) {
    throw InputError("connecting family needs distinct endpoints, got '" + g.label(source) +
                     "' twice");
  }
  WalkFamily f;
  f.kind_ = Kind::connecting;
  f.vertex_count_ = g.vertex_count();
  f.source_ = source;
  f.target_ = target;
  return f;
}

WalkFamily WalkFamily::via_vertex(const Graph& g, VertexId source, VertexId via,
                                  VertexId target) {
  require_vertex(g, source);
  require_vertex(g, via);
  require_vertex(g, target);
  if (source == via || via == target || source == target) {
    throw InputError("via-vertex family needs three distinct vertices");
  }
  WalkFamily f;
  f.kind_ = Kind::via_vertex;
  f.vertex_count_ = g.vertex_count();
  f.source_ = source;
  f.via_ = via;
  f.target_ = target;
  return f;
}

WalkFamily WalkFamily::explicit_list(const Graph& g, std::vector<Walk> walks) {
  WalkFamily f;
  f.kind_ = Kind::explicit_list;
  f.vertex_count_ = g.vertex_count();
  for (auto& w : walks) {
    // Walks carry their vertex string; re-validate against this graph.
    const auto checked = Walk::from_vertices(g, w.vertices());
    if (checked.edges().size() != w.edges().size() ||
        !std::equal(checked.edges().begin(), checked.edges().end(), w.edges().begin())) {
      throw InputError("walk does not belong to this graph");
    }
    if (std::find(f.walks_.begin(), f.walks_.end(), w) == f.walks_.end()) {
      f.walks_.push_back(std::move(w));
    }
  }
  return f;
}

bool WalkFamily::contains(const Walk& w) const {
  switch (kind_) {
  case Kind::connecting:
    return w.start() == source_ && w.end() == target_;
  case Kind::via_vertex: {
    if (w.start() != source_ || w.end() != target_) return false;
    const auto vs = w.vertices();
    return std::find(vs.begin(), vs.end(), via_) != vs.end();
  }
  case Kind::explicit_list:
    return std::find(walks_.begin(), walks_.end(), w) != walks_.end();
  }
  return false;
}

void check_compatible(const Graph& g, const WalkFamily& family) {
  if (family.vertex_count_ != g.vertex_count()) {
    throw InputError("walk family was built for a graph with " +
                     std::to_string(family.vertex_count_) + " vertices");
  }
  for (const Walk& w : family.walks()) {
    for (EdgeId e : w.edges()) {
      if (e >= g.edge_count()) throw InputError("walk family uses an unknown edge");
    }
  }
}

std::optional<ShortestWalk> shortest_walk(const Graph& g, const WalkFamily& family,
                                          const EdgeDensity& rho) {
  check_compatible(g, family);
  if (rho.size() != g.edge_count()) throw InputError("density size does not match the graph");
  for (double v : rho.values()) {
    if (v < 0.0) throw ParameterError("shortest-walk search needs a nonnegative density");
  }
  return search(g, family, rho.values());
}

std::optional<ShortestWalk> hop_shortest_walk(const Graph& g, const WalkFamily& family) {
  check_compatible(g, family);
  const std::vector<double> ones(g.edge_count(), 1.0);
  return search(g, family, ones);
}

double family_rho_length(const Graph& g, const WalkFamily& family, const EdgeDensity& rho) {
  auto best = shortest_walk(g, family, rho);
  return best ? best->length : empty_family_length;
}

} // namespace pmod
