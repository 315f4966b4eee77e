#include "pmod/solver.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "dual_newton.hpp"
#include "pmod/errors.hpp"
#include "simplex.hpp"

namespace pmod {
namespace {

using detail::DualNewton;
using detail::PowerPenalty;
using detail::RegularizedLinearPenalty;

constexpr double kInnerTolFloor = 1e-15;

void check_tol(double tol) {
  if (!(tol > 0.0) || !std::isfinite(tol)) {
    throw ParameterError("tolerance must be positive and finite");
  }
}

void check_sigma(const UsageMatrix& usage, std::span<const double> sigma) {
  if (sigma.size() != usage.cols()) {
    throw InputError("weight vector size does not match usage matrix width");
  }
  for (double s : sigma) {
    if (!(s > 0.0) || !std::isfinite(s)) throw InputError("nonpositive weight");
  }
}

bool is_active(const std::vector<Walk>& walks, const Walk& w) {
  return std::find(walks.begin(), walks.end(), w) != walks.end();
}

std::vector<double> scaled(std::span<const double> v, double factor) {
  std::vector<double> out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = v[i] * factor;
  return out;
}

std::size_t outer_cap(const Graph& g, const SolverOptions& o) {
  return o.max_outer_iterations ? o.max_outer_iterations
                                : std::max<std::size_t>(1, 10 * g.edge_count());
}

[[noreturn]] void give_up(const char* what, double upper, double lower, std::size_t it) {
  throw NonConvergence(std::string(what) + " (primal " + std::to_string(upper) +
                           ", dual " + std::to_string(lower) + ")",
                       upper, lower, it);
}

void finish(ModulusResult& r, std::vector<double> rho_star, double dual,
            std::span<const double> sigma) {
  r.rho_star = EdgeDensity(std::move(rho_star));
  r.primal_upper = energy(r.rho_star, r.p, sigma);
  r.value = r.primal_upper;
  r.dual_lower = std::min(dual, r.primal_upper);
  r.gap = r.primal_upper - r.dual_lower;
}

// 1 < p < inf.
void solve_power(const Graph& g, const WalkFamily& family, double p,
                 const SolverOptions& o, UsageMatrix& usage, ModulusResult& r) {
  const auto sigma = g.sigma();
  DualNewton<PowerPenalty> dn(usage, PowerPenalty(p, sigma));
  r.ill_conditioned = p < 1.05;
  double inner_tol = o.tol * (r.ill_conditioned ? 0.01 : 0.1);
  const std::size_t cap = outer_cap(g, o);
  double upper = std::numeric_limits<double>::infinity();
  double lower = 0.0;

  for (r.iterations = 1; r.iterations <= cap; ++r.iterations) {
    dn.solve(inner_tol, o.max_inner_iterations);
    const EdgeDensity rho(std::vector<double>(dn.rho().begin(), dn.rho().end()));
    const auto sw = shortest_walk(g, family, rho);
    const double len = sw->length;
    lower = dn.dual_value();
    if (len > 0.0) {
      const auto candidate = EdgeDensity(scaled(rho.values(), 1.0 / len));
      upper = energy(candidate, p, sigma);
      if (upper - lower <= o.tol * upper) {
        r.lambda = dn.lambda();
        finish(r, std::vector<double>(candidate.values().begin(), candidate.values().end()),
               lower, sigma);
        return;
      }
    }
    if (len < dn.min_row_length() && !is_active(r.active_walks, sw->walk)) {
      usage.add_row(sw->walk);
      r.active_walks.push_back(sw->walk);
      dn.sync_rows();
      continue;
    }
    if (inner_tol <= kInnerTolFloor) break;
    inner_tol = std::max(kInnerTolFloor, inner_tol * 0.1);
  }
  give_up("modulus did not converge", upper, lower, r.iterations);
}

// Least-Euclidean-norm minimizer of the linear energy, via the exact
// quadratic regularization sigma.rho + (eps/2)|rho|^2 for decreasing eps.
// Returns an empty vector if no eps reproduces the LP value within tol.
std::vector<double> canonical_p1_density(const Graph& g, const WalkFamily& family,
                                         const std::vector<Walk>& seed, double lp_value,
                                         const SolverOptions& o) {
  const auto sigma = g.sigma();
  const std::size_t cap = outer_cap(g, o);
  for (int k = 0; k <= 8; k += 2) {
    const double eps = g.sigma_min() * std::pow(10.0, -k);
    UsageMatrix usage(g.edge_count());
    std::vector<Walk> walks = seed;
    for (const auto& w : walks) usage.add_row(w);
    DualNewton<RegularizedLinearPenalty> dn(usage, RegularizedLinearPenalty(eps, sigma));
    bool done = false;
    std::vector<double> rho;
    for (std::size_t it = 0; it < cap && !done; ++it) {
      dn.solve(1e-15, o.max_inner_iterations);
      const EdgeDensity current(std::vector<double>(dn.rho().begin(), dn.rho().end()));
      const auto sw = shortest_walk(g, family, current);
      if (sw->length < dn.min_row_length() * (1.0 - 1e-13) &&
          !is_active(walks, sw->walk)) {
        usage.add_row(sw->walk);
        walks.push_back(sw->walk);
        dn.sync_rows();
        continue;
      }
      if (sw->length > 0.0) rho = scaled(current.values(), 1.0 / sw->length);
      done = true;
    }
    if (rho.empty()) continue;
    double e1 = 0.0;
    for (std::size_t e = 0; e < rho.size(); ++e) e1 += sigma[e] * rho[e];
    if (e1 - lp_value <= o.tol * lp_value) return rho;
  }
  return {};
}

void solve_linear(const Graph& g, const WalkFamily& family, const SolverOptions& o,
                  UsageMatrix& usage, ModulusResult& r) {
  const auto sigma = g.sigma();
  detail::PathLp lp(sigma);
  lp.add_column(usage.row(0));
  const std::size_t cap = outer_cap(g, o);
  double upper = std::numeric_limits<double>::infinity();
  double lower = 0.0;

  for (r.iterations = 1; r.iterations <= cap; ++r.iterations) {
    if (!lp.solve()) throw InternalError("restricted LP pivoting did not terminate");
    const EdgeDensity rho(lp.prices());
    const auto sw = shortest_walk(g, family, rho);
    const double len = sw->length;
    lower = lp.objective();
    if (len < 1.0 - 1e-13 && !is_active(r.active_walks, sw->walk)) {
      usage.add_row(sw->walk);
      r.active_walks.push_back(sw->walk);
      lp.add_column(usage.row(usage.rows() - 1));
      continue;
    }
    if (!(len > 0.0)) break;
    std::vector<double> rho_star = scaled(rho.values(), 1.0 / len);
    upper = 0.0;
    for (std::size_t e = 0; e < rho_star.size(); ++e) upper += sigma[e] * rho_star[e];
    if (upper - lower > o.tol * upper || len < 1.0 - o.tol) break;

    r.lambda = lp.lambda();
    if (o.canonical_p1_density) {
      auto canonical = canonical_p1_density(g, family, r.active_walks, upper, o);
      if (!canonical.empty()) rho_star = std::move(canonical);
    }
    finish(r, std::move(rho_star), lower, sigma);
    // The LP optimum is the estimate; the canonical density's energy can
    // exceed it by rounding.
    r.value = std::min(r.value, upper);
    r.dual_lower = std::min(r.dual_lower, r.value);
    r.gap = r.primal_upper - r.dual_lower;
    return;
  }
  give_up("1-modulus did not converge", upper, lower, r.iterations);
}

} // namespace

ModulusResult modulus(const Graph& g, const WalkFamily& family, Exponent p,
                      const SolverOptions& options) {
  p.validate();
  check_tol(options.tol);
  check_compatible(g, family);

  ModulusResult r;
  r.p = p;
  const std::size_t m = g.edge_count();
  const auto seed = hop_shortest_walk(g, family);
  if (!seed) {
    r.rho_star = EdgeDensity::zero(m);
    return r;
  }
  r.active_walks.push_back(seed->walk);

  if (p.is_infinite()) {
    const double v = 1.0 / static_cast<double>(seed->walk.hops());
    r.rho_star = EdgeDensity::constant(m, v);
    r.lambda = {v};
    r.value = r.primal_upper = r.dual_lower = v;
    return r;
  }

  UsageMatrix usage(m);
  usage.add_row(seed->walk);
  if (p.value() == 1.0) {
    solve_linear(g, family, options, usage, r);
  } else {
    solve_power(g, family, p.value(), options, usage, r);
  }
  return r;
}

ModulusResult modulus(const Graph& g, const WalkFamily& family, Exponent p, double tol) {
  SolverOptions o;
  o.tol = tol;
  return modulus(g, family, p, o);
}

RestrictedSolution solve_restricted_program(const UsageMatrix& usage,
                                            std::span<const double> sigma, double p,
                                            double tol) {
  if (!(p > 1.0) || !std::isfinite(p)) throw ParameterError("p must lie in (1, inf)");
  check_tol(tol);
  if (usage.empty()) throw InputError("usage matrix has no rows");
  check_sigma(usage, sigma);

  DualNewton<PowerPenalty> dn(usage, PowerPenalty(p, sigma));
  const auto status = dn.solve(tol, 2000);
  if (!status.converged) {
    give_up("restricted program did not converge", dn.restricted_upper(), dn.dual_value(),
            status.iterations);
  }
  RestrictedSolution s;
  s.rho = EdgeDensity(std::vector<double>(dn.rho().begin(), dn.rho().end()));
  s.lambda = dn.lambda();
  s.dual_value = dn.dual_value();
  s.primal_value = dn.restricted_upper();
  s.gap = s.primal_value - s.dual_value;
  s.iterations = status.iterations;
  return s;
}

RestrictedSolution solve_restricted_lp(const UsageMatrix& usage,
                                       std::span<const double> sigma) {
  if (usage.empty()) throw InputError("usage matrix has no rows");
  check_sigma(usage, sigma);

  detail::PathLp lp(sigma);
  for (std::size_t i = 0; i < usage.rows(); ++i) lp.add_column(usage.row(i));
  if (!lp.solve()) throw InternalError("restricted LP pivoting did not terminate");

  RestrictedSolution s;
  s.rho = EdgeDensity(lp.prices());
  s.lambda = lp.lambda();
  s.dual_value = lp.objective();
  std::vector<double> len(usage.rows());
  usage.row_lengths(s.rho.values(), len);
  const double min_len = *std::min_element(len.begin(), len.end());
  if (!(min_len > 0.0)) throw InternalError("LP density violates a row");
  for (std::size_t e = 0; e < sigma.size(); ++e) s.primal_value += sigma[e] * s.rho[e];
  s.primal_value /= min_len;
  s.gap = s.primal_value - s.dual_value;
  s.iterations = lp.columns();
  return s;
}

std::pair<double, EdgeDensity> mod_infinity(const Graph& g, const WalkFamily& family) {
  check_compatible(g, family);
  const auto seed = hop_shortest_walk(g, family);
  if (!seed) return {0.0, EdgeDensity::zero(g.edge_count())};
  const double v = 1.0 / static_cast<double>(seed->walk.hops());
  return {v, EdgeDensity::constant(g.edge_count(), v)};
}

double dual_energy(std::span<const double> lambda, const UsageMatrix& usage,
                   std::span<const double> sigma, double p) {
  if (!(p > 1.0) || !std::isfinite(p)) throw ParameterError("p must lie in (1, inf)");
  check_sigma(usage, sigma);
  if (lambda.size() != usage.rows()) throw InputError("one weight per usage row expected");
  double total = 0.0;
  for (double l : lambda) {
    if (!(l >= 0.0) || !std::isfinite(l)) throw ParameterError("negative dual weight");
    total += l;
  }
  std::vector<double> flux(usage.cols());
  usage.flux(lambda, flux);
  const double q = p / (p - 1.0);
  double conj = 0.0;
  for (std::size_t e = 0; e < flux.size(); ++e) {
    if (flux[e] > 0.0) conj += sigma[e] * std::pow(flux[e] / (p * sigma[e]), q);
  }
  return total - (p - 1.0) * conj;
}

} // namespace pmod
