#pragma once

#include <optional>
#include <string>
#include <vector>

#include "pmod/density.hpp"
#include "pmod/exponent.hpp"
#include "pmod/graph.hpp"
#include "pmod/solver.hpp"
#include "pmod/walk_family.hpp"

namespace pmod {

struct SweepRow {
  Exponent p = 1.0;
  double value = 0.0;
  /// σ(E)^(-1/p) Mod_p^(1/p); Mod_inf itself on the p = inf row.
  double normalized = 0.0;
  double dual_lower = 0.0;
  double primal_upper = 0.0;
  double gap = 0.0;
  std::size_t iterations = 0;
  /// Solver error text when the row failed.
  std::optional<std::string> error;
  /// Mod_p <= Mod_(previous finite p) + 2 tol.
  bool value_monotone = true;
  /// normalized >= normalized(previous row) - 2 tol.
  bool normalized_monotone = true;
};

/// 1, 1.25, 1.5, 2, 3, 4, 8, 16, 32, inf.
std::vector<Exponent> default_p_grid();

/// One solve per p (run concurrently), rows in the order of p_list, each
/// annotated with monotonicity verdicts against the previous successful
/// row. Throws ParameterError unless p_list is ascending with p >= 1.
std::vector<SweepRow> p_sweep(const Graph& g, const WalkFamily& family,
                              const std::vector<Exponent>& p_list, double tol);

bool sweep_monotone(const std::vector<SweepRow>& rows);

struct PotentialResult {
  std::vector<double> phi;
  /// max_e |ρ*(x,y) - |φ(x) - φ(y)||
  double max_mismatch = 0.0;
};

/// φ(x) = ρ*-shortest distance from s to x. Throws UnsupportedOperation on
/// directed graphs and ParameterError on negative ρ*.
PotentialResult reconstruct_potential(const Graph& g, VertexId s, VertexId t,
                                      const EdgeDensity& rho_star);

/// g(e) = ρ*(e)^p, the derivative of Mod_p with respect to σ(e).
std::vector<double> sigma_gradient(const Graph& g, const WalkFamily& family, double p,
                                   double tol);
/// The same from an existing converged result.
std::vector<double> sigma_gradient(const ModulusResult& result);

struct FiniteDifference {
  double derivative = 0.0;
  /// Upper bound on the part of the error that comes from the two solves.
  double solver_noise = 0.0;
};

/// Central difference of Mod_p in σ(e) with step h = step_ratio σ(e).
FiniteDifference modulus_finite_difference(const Graph& g, const WalkFamily& family,
                                           double p, EdgeId e, double step_ratio,
                                           double tol);

/// Certified bound on ‖ρ - ρ*‖_p for an admissible ρ with energy E given a
/// lower bound L <= Mod_p, from Clarkson's inequalities. Throws InputError
/// if L > E and ParameterError unless 1 < p < inf.
double clarkson_certificate(double p, double sigma_min, double energy_of_rho,
                            double lower_bound);

/// clarkson_certificate for a converged solver result.
double clarkson_certificate(const ModulusResult& result, double sigma_min);

/// ‖ρ_p - ρ_q‖_p between two converged extremal densities.
double density_continuity_check(const Graph& g, const WalkFamily& family, double p,
                                double q, double tol);

} // namespace pmod
