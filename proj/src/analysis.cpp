#include "pmod/analysis.hpp"

#include <cmath>
#include <future>

#include "pmod/errors.hpp"
#include "shortest_paths.hpp"

namespace pmod {

std::vector<Exponent> default_p_grid() {
  return {1.0, 1.25, 1.5, 2.0, 3.0, 4.0, 8.0, 16.0, 32.0, Exponent::infinity()};
}

namespace {

bool ascending(Exponent a, Exponent b) {
  if (a.is_infinite()) return b.is_infinite();
  return b.is_infinite() || a.value() <= b.value();
}

SweepRow sweep_row(const Graph& g, const WalkFamily& family, Exponent p, double tol) {
  SweepRow row;
  row.p = p;
  try {
    const ModulusResult r = modulus(g, family, p, tol);
    row.value = r.value;
    row.normalized = p.is_infinite()
                         ? r.value
                         : std::pow(r.value / g.sigma_total(), 1.0 / p.value());
    row.dual_lower = r.dual_lower;
    row.primal_upper = r.primal_upper;
    row.gap = r.gap;
    row.iterations = r.iterations;
  } catch (const Error& e) {
    row.error = e.what();
  }
  return row;
}

} // namespace

std::vector<SweepRow> p_sweep(const Graph& g, const WalkFamily& family,
                              const std::vector<Exponent>& p_list, double tol) {
  for (std::size_t i = 0; i < p_list.size(); ++i) {
    p_list[i].validate();
    if (i > 0 && !ascending(p_list[i - 1], p_list[i])) {
      throw ParameterError("p values must be ascending");
    }
  }
  if (!(tol > 0.0)) throw ParameterError("tolerance must be positive");

  std::vector<std::future<SweepRow>> pending;
  pending.reserve(p_list.size());
  for (Exponent p : p_list) {
    pending.push_back(std::async(std::launch::async, [&g, &family, p, tol] {
      return sweep_row(g, family, p, tol);
    }));
  }
  std::vector<SweepRow> rows;
  rows.reserve(p_list.size());
  for (auto& f : pending) rows.push_back(f.get());

  // Verdicts against the previous successful row. Mod_inf is not the limit
  // of Mod_p, so the infinite row only takes part in the normalized check.
  const SweepRow* prev_finite = nullptr;
  const SweepRow* prev = nullptr;
  for (auto& row : rows) {
    if (row.error) continue;
    if (prev_finite && row.p.is_finite()) {
      row.value_monotone =
          row.value <= prev_finite->value + 2.0 * tol * std::max(1.0, prev_finite->value);
    }
    if (prev) row.normalized_monotone = row.normalized >= prev->normalized - 2.0 * tol;
    if (row.p.is_finite()) prev_finite = &row;
    prev = &row;
  }
  return rows;
}

bool sweep_monotone(const std::vector<SweepRow>& rows) {
  for (const auto& r : rows) {
    if (!r.value_monotone || !r.normalized_monotone) return false;
  }
  return true;
}

PotentialResult reconstruct_potential(const Graph& g, VertexId s, VertexId t,
                                      const EdgeDensity& rho_star) {
  if (g.directed()) throw UnsupportedOperation("potentials need an undirected graph");
  if (s >= g.vertex_count() || t >= g.vertex_count()) throw InputError("unknown vertex");
  if (rho_star.size() != g.edge_count()) throw InputError("density size mismatch");
  for (double r : rho_star.values()) {
    if (r < 0.0) throw ParameterError("negative density entry");
  }
  const auto tree = detail::dijkstra(g, s, rho_star.values());
  PotentialResult out;
  out.phi = tree.dist;
  out.phi[s] = 0.0;
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    const auto [x, y] = g.edge(e);
    if (!std::isfinite(out.phi[x])) continue; // outside the component of s
    const double mismatch = std::abs(rho_star[e] - std::abs(out.phi[x] - out.phi[y]));
    out.max_mismatch = std::max(out.max_mismatch, mismatch);
  }
  return out;
}

std::vector<double> sigma_gradient(const ModulusResult& result) {
  if (!result.p.is_finite() || !(result.p.value() > 1.0)) {
    throw ParameterError("the gradient formula needs 1 < p < inf");
  }
  std::vector<double> g(result.rho_star.size());
  for (std::size_t e = 0; e < g.size(); ++e) {
    g[e] = std::pow(result.rho_star[e], result.p.value());
  }
  return g;
}

std::vector<double> sigma_gradient(const Graph& g, const WalkFamily& family, double p,
                                   double tol) {
  if (!(p > 1.0) || !std::isfinite(p)) {
    throw ParameterError("the gradient formula needs 1 < p < inf");
  }
  return sigma_gradient(modulus(g, family, p, tol));
}

FiniteDifference modulus_finite_difference(const Graph& g, const WalkFamily& family,
                                           double p, EdgeId e, double step_ratio,
                                           double tol) {
  if (e >= g.edge_count()) throw InputError("edge id out of range");
  if (!(step_ratio > 0.0 && step_ratio < 1.0)) {
    throw ParameterError("step ratio must lie in (0, 1)");
  }
  const double h = step_ratio * g.sigma(e);
  std::vector<double> sigma(g.sigma().begin(), g.sigma().end());
  sigma[e] += h;
  const auto plus = modulus(g.with_sigma(sigma), family, p, tol);
  sigma[e] -= 2.0 * h;
  const auto minus = modulus(g.with_sigma(sigma), family, p, tol);
  return {(plus.value - minus.value) / (2.0 * h), (plus.gap + minus.gap) / (2.0 * h)};
}

double clarkson_certificate(double p, double sigma_min, double energy_of_rho,
                            double lower_bound) {
  if (!(p > 1.0) || !std::isfinite(p)) throw ParameterError("p must lie in (1, inf)");
  if (!(sigma_min > 0.0)) throw ParameterError("sigma_min must be positive");
  if (lower_bound > energy_of_rho) throw InputError("lower bound exceeds the energy");
  const double e = energy_of_rho;
  const double l = std::max(0.0, lower_bound);
  if (p >= 2.0) return std::pow(std::exp2(p - 1.0) / sigma_min * (e - l), 1.0 / p);

  // f(M) = ((E+M)/2)^a - M^a, a = p'/p, peaks at M* = E / (2^(1/(2-p)) - 1);
  // the bound over Mod in [L, E] is f at max(L, M*).
  const double pp = p / (p - 1.0);
  const double a = pp / p;
  const double m = std::max(l, e / (std::exp2(1.0 / (2.0 - p)) - 1.0));
  const double f = std::max(0.0, std::pow(0.5 * (e + m), a) - std::pow(m, a));
  return std::pow(std::pow(std::exp2(p) / sigma_min, a) * f, 1.0 / pp);
}

double clarkson_certificate(const ModulusResult& result, double sigma_min) {
  if (!result.p.is_finite()) throw ParameterError("p must lie in (1, inf)");
  return clarkson_certificate(result.p.value(), sigma_min, result.value,
                              std::min(result.dual_lower, result.value));
}

double density_continuity_check(const Graph& g, const WalkFamily& family, double p,
                                double q, double tol) {
  for (double x : {p, q}) {
    if (!(x > 1.0) || !std::isfinite(x)) throw ParameterError("p and q must lie in (1, inf)");
  }
  const auto rp = modulus(g, family, p, tol);
  const auto rq = modulus(g, family, q, tol);
  return p_norm_distance(rp.rho_star, rq.rho_star, p);
}

} // namespace pmod
