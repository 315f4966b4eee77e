#include "pmod/oracles.hpp"

#include <Eigen/LU>

#include <algorithm>
#include <cmath>
#include <deque>
#include <limits>

#include "pmod/errors.hpp"

namespace pmod {
namespace {

void check_vertex(const Graph& g, VertexId v) {
  if (v >= g.vertex_count()) throw InputError("unknown vertex id " + std::to_string(v));
}

void check_pair(const Graph& g, VertexId s, VertexId t) {
  check_vertex(g, s);
  check_vertex(g, t);
  if (s == t) throw InputError("source and target must differ");
}

// Hop distances from s along traversable arcs, skipping edges flagged in `removed`.
std::vector<std::size_t> bfs(const Graph& g, VertexId s, const std::vector<char>* removed) {
  constexpr auto kInf = std::numeric_limits<std::size_t>::max();
  std::vector<std::size_t> dist(g.vertex_count(), kInf);
  std::deque<VertexId> queue{s};
  dist[s] = 0;
  while (!queue.empty()) {
    const VertexId v = queue.front();
    queue.pop_front();
    for (const Arc& a : g.arcs_from(v)) {
      if (removed && (*removed)[a.edge]) continue;
      if (dist[a.to] != kInf) continue;
      dist[a.to] = dist[v] + 1;
      queue.push_back(a.to);
    }
  }
  return dist;
}

} // namespace

std::optional<std::size_t> shortest_hops(const Graph& g, VertexId s, VertexId t) {
  check_pair(g, s, t);
  const auto d = bfs(g, s, nullptr)[t];
  if (d == std::numeric_limits<std::size_t>::max()) return std::nullopt;
  return d;
}

std::vector<double> harmonic_potential(const Graph& g, VertexId s, VertexId t) {
  if (g.directed()) throw UnsupportedOperation("effective conductance needs an undirected graph");
  check_pair(g, s, t);
  const auto reach = bfs(g, s, nullptr);
  constexpr auto kInf = std::numeric_limits<std::size_t>::max();
  if (reach[t] == kInf) throw InputError("source and target are not connected");

  // Unknowns: component vertices other than s and t.
  const std::size_t n = g.vertex_count();
  std::vector<Eigen::Index> index(n, -1);
  Eigen::Index k = 0;
  for (VertexId v = 0; v < n; ++v) {
    if (reach[v] != kInf && v != s && v != t) index[v] = k++;
  }
  std::vector<double> phi(n, std::numeric_limits<double>::quiet_NaN());
  phi[s] = 0.0;
  phi[t] = 1.0;
  if (k == 0) return phi;

  Eigen::MatrixXd lap = Eigen::MatrixXd::Zero(k, k);
  Eigen::VectorXd rhs = Eigen::VectorXd::Zero(k);
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    const auto [x, y] = g.edge(e);
    if (reach[x] == kInf) continue;
    const double c = g.sigma(e);
    const Eigen::Index ix = index[x], iy = index[y];
    if (ix >= 0) lap(ix, ix) += c;
    if (iy >= 0) lap(iy, iy) += c;
    if (ix >= 0 && iy >= 0) {
      lap(ix, iy) -= c;
      lap(iy, ix) -= c;
    }
    // Boundary values move to the right-hand side; only φ(t) = 1 contributes.
    if (ix >= 0 && y == t) rhs(ix) += c;
    if (iy >= 0 && x == t) rhs(iy) += c;
  }
  const Eigen::VectorXd sol = lap.partialPivLu().solve(rhs);
  for (VertexId v = 0; v < n; ++v) {
    if (index[v] >= 0) phi[v] = sol(index[v]);
  }
  return phi;
}

double effective_conductance(const Graph& g, VertexId s, VertexId t) {
  const auto phi = harmonic_potential(g, s, t);
  double power = 0.0;
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    const auto [x, y] = g.edge(e);
    if (std::isnan(phi[x])) continue;
    const double d = phi[x] - phi[y];
    power += g.sigma(e) * d * d;
  }
  return power;
}

FlowResult max_flow_min_cut(const Graph& g, VertexId s, VertexId t) {
  check_pair(g, s, t);
  const std::size_t n = g.vertex_count();

  // Residual arcs come in pairs (2e, 2e+1) = (tail->head, head->tail).
  struct Residual {
    VertexId to;
    double cap;
  };
  std::vector<Residual> arcs;
  std::vector<std::vector<std::size_t>> out(n);
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    const auto [x, y] = g.edge(e);
    const double c = g.sigma(e);
    out[x].push_back(arcs.size());
    arcs.push_back({y, c});
    out[y].push_back(arcs.size());
    arcs.push_back({x, g.directed() ? 0.0 : c});
  }

  constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();
  auto residual_search = [&](std::vector<std::size_t>& via) {
    via.assign(n, kNone);
    std::vector<char> seen(n, 0);
    std::deque<VertexId> queue{s};
    seen[s] = 1;
    while (!queue.empty()) {
      const VertexId v = queue.front();
      queue.pop_front();
      for (std::size_t a : out[v]) {
        if (arcs[a].cap <= 0.0 || seen[arcs[a].to]) continue;
        seen[arcs[a].to] = 1;
        via[arcs[a].to] = a;
        queue.push_back(arcs[a].to);
      }
    }
    return seen;
  };

  FlowResult result;
  std::vector<std::size_t> via;
  for (;;) {
    const auto seen = residual_search(via);
    if (!seen[t]) {
      for (EdgeId e = 0; e < g.edge_count(); ++e) {
        const auto [x, y] = g.edge(e);
        const bool crosses = g.directed() ? (seen[x] && !seen[y]) : (seen[x] != seen[y]);
        if (crosses) result.cut_edges.push_back(e);
      }
      break;
    }
    double push = std::numeric_limits<double>::infinity();
    for (VertexId v = t; v != s; v = arcs[via[v] ^ 1].to) push = std::min(push, arcs[via[v]].cap);
    for (VertexId v = t; v != s; v = arcs[via[v] ^ 1].to) {
      arcs[via[v]].cap -= push;
      arcs[via[v] ^ 1].cap += push;
    }
    result.value += push;
  }
  if (!disconnects(g, result.cut_edges, s, t)) {
    throw InternalError("minimum cut does not disconnect source from target");
  }
  return result;
}

bool disconnects(const Graph& g, const std::vector<EdgeId>& edges, VertexId s, VertexId t) {
  check_pair(g, s, t);
  std::vector<char> removed(g.edge_count(), 0);
  for (EdgeId e : edges) {
    if (e >= g.edge_count()) throw InputError("edge id out of range");
    removed[e] = 1;
  }
  return bfs(g, s, &removed)[t] == std::numeric_limits<std::size_t>::max();
}

} // namespace pmod
