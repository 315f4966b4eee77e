#include "pmod/graph.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "pmod/errors.hpp"

namespace pmod {

Graph::Graph(bool directed, std::vector<std::string> labels, std::vector<Edge> edges,
             std::vector<double> sigma)
    : directed_(directed), labels_(std::move(labels)), edges_(std::move(edges)),
      sigma_(std::move(sigma)) {
  if (labels_.empty()) throw InputError("graph needs at least one vertex");
  if (labels_.size() > std::numeric_limits<VertexId>::max()) {
    throw InputError("too many vertices");
  }
  if (sigma_.size() != edges_.size()) {
    throw InputError("expected one weight per edge");
  }
  for (VertexId v = 0; v < labels_.size(); ++v) {
    if (!index_.emplace(labels_[v], v).second) {
      throw InputError("duplicate vertex '" + labels_[v] + "'");
    }
  }

  const auto n = static_cast<VertexId>(labels_.size());
  sigma_min_ = edges_.empty() ? 0.0 : std::numeric_limits<double>::infinity();
  for (EdgeId e = 0; e < edges_.size(); ++e) {
    const auto [a, b] = edges_[e];
    if (a >= n || b >= n) throw InputError("edge " + std::to_string(e) + ": unknown vertex");
    if (a == b) throw InputError("self-loop at '" + labels_[a] + "'");
    if (!(sigma_[e] > 0.0) || !std::isfinite(sigma_[e])) {
      throw InputError("nonpositive weight on edge " + edge_key(e));
    }
    const auto key = directed_ ? pair_key(a, b) : pair_key(std::min(a, b), std::max(a, b));
    if (!pairs_.emplace(key, e).second) {
      throw InputError("duplicate edge " + edge_key(e));
    }
    sigma_min_ = std::min(sigma_min_, sigma_[e]);
  }
  sigma_total_ = std::accumulate(sigma_.begin(), sigma_.end(), 0.0);

  // CSR incidence, arcs ordered by edge id within each vertex.
  arc_offsets_.assign(n + 1, 0);
  for (const auto& [a, b] : edges_) {
    ++arc_offsets_[a + 1];
    if (!directed_) ++arc_offsets_[b + 1];
  }
  std::partial_sum(arc_offsets_.begin(), arc_offsets_.end(), arc_offsets_.begin());
  arcs_.resize(arc_offsets_.back());
  std::vector<std::size_t> fill(arc_offsets_.begin(), arc_offsets_.end() - 1);
  for (EdgeId e = 0; e < edges_.size(); ++e) {
    const auto [a, b] = edges_[e];
    arcs_[fill[a]++] = Arc{e, b};
    if (!directed_) arcs_[fill[b]++] = Arc{e, a};
  }
}

std::optional<VertexId> Graph::find_vertex(std::string_view label) const {
  auto it = index_.find(std::string(label));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

VertexId Graph::vertex(std::string_view label) const {
  if (auto v = find_vertex(label)) return *v;
  throw InputError("unknown vertex '" + std::string(label) + "'");
}

std::span<const Arc> Graph::arcs_from(VertexId v) const {
  if (v >= vertex_count()) throw InputError("vertex id out of range");
  return {arcs_.data() + arc_offsets_[v], arcs_.data() + arc_offsets_[v + 1]};
}

std::optional<EdgeId> Graph::find_edge(VertexId from, VertexId to) const {
  const auto key =
      directed_ ? pair_key(from, to) : pair_key(std::min(from, to), std::max(from, to));
  auto it = pairs_.find(key);
  if (it == pairs_.end()) return std::nullopt;
  return it->second;
}

std::optional<VertexId> Graph::traverse(EdgeId e, VertexId from) const {
  if (e >= edges_.size()) return std::nullopt;
  const auto [a, b] = edges_[e];
  if (from == a) return b;
  if (!directed_ && from == b) return a;
  return std::nullopt;
}

Graph Graph::with_sigma(std::vector<double> sigma) const {
  return Graph(directed_, labels_, edges_, std::move(sigma));
}

std::string Graph::edge_key(EdgeId e) const {
  const auto [a, b] = edges_.at(e);
  return labels_.at(a) + "," + labels_.at(b);
}

bool operator==(const Graph& a, const Graph& b) {
  if (a.directed_ != b.directed_ || a.labels_ != b.labels_) return false;
  if (a.edges_.size() != b.edges_.size()) return false;
  for (std::size_t e = 0; e < a.edges_.size(); ++e) {
    if (a.edges_[e].tail != b.edges_[e].tail || a.edges_[e].head != b.edges_[e].head) {
      return false;
    }
  }
  return a.sigma_ == b.sigma_;
}

} // namespace pmod
