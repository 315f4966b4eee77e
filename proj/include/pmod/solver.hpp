#pragma once

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "pmod/density.hpp"
#include "pmod/exponent.hpp"
#include "pmod/graph.hpp"
#include "pmod/usage_matrix.hpp"
#include "pmod/walk.hpp"
#include "pmod/walk_family.hpp"

namespace pmod {

struct SolverOptions {
  /// Relative duality gap and admissibility slack required on exit.
  double tol = 1e-8;
  /// Outer constraint-generation iterations; 0 means 10 * edge_count.
  std::size_t max_outer_iterations = 0;
  /// Newton iterations per restricted solve.
  std::size_t max_inner_iterations = 400;
  /// At p = 1, replace the simplex vertex by the extremal density of
  /// least Euclidean norm (the 1-modulus extremal density is not unique).
  bool canonical_p1_density = true;
};

struct ModulusResult {
  Exponent p = 1.0;
  /// Energy of rho_star; an upper bound within gap of Mod_p.
  double value = 0.0;
  /// Admissible for the whole family (ℓ_ρ(Γ) = 1 up to rounding).
  EdgeDensity rho_star;
  /// Generated subfamily; lambda[i] belongs to active_walks[i].
  std::vector<Walk> active_walks;
  std::vector<double> lambda;
  double primal_upper = 0.0;
  double dual_lower = 0.0;
  double gap = 0.0;
  std::size_t iterations = 0;
  /// Set when 1 < p < 1.05; the inner tolerance was tightened.
  bool ill_conditioned = false;
};

/// Mod_p(Γ) by constraint generation. Seeds the active set with the
/// hop-shortest walk, alternates restricted solves with shortest-walk
/// queries, and stops once the rescaled density ρ/ℓ_ρ(Γ) and the dual
/// weights certify a relative gap <= tol.
///
/// p = 1 uses a simplex method on the restricted LP, 1 < p < inf uses
/// projected Newton ascent on the dual weights, p = inf is closed form.
/// Throws ParameterError for p < 1 or tol <= 0 and NonConvergence when the
/// iteration cap is reached.
ModulusResult modulus(const Graph& g, const WalkFamily& family, Exponent p,
                      const SolverOptions& options);
ModulusResult modulus(const Graph& g, const WalkFamily& family, Exponent p,
                      double tol = 1e-8);

/// Solution of the restricted program over a fixed usage matrix.
struct RestrictedSolution {
  EdgeDensity rho;           ///< ρ_λ (p > 1) or the LP primal (p = 1)
  std::vector<double> lambda;
  double dual_value = 0.0;   ///< F_p(λ)
  double primal_value = 0.0; ///< energy of ρ scaled to satisfy every row
  double gap = 0.0;
  std::size_t iterations = 0;
};

/// Maximizes the concave dual F_p over λ >= 0 for a finite p > 1 and
/// recovers ρ_λ(e) = ((1/(pσ(e))) Σ N(γ,e)λ(γ))^(1/(p-1)).
/// Throws NonConvergence if the relative gap stays above tol.
RestrictedSolution solve_restricted_program(const UsageMatrix& usage,
                                            std::span<const double> sigma, double p,
                                            double tol);

/// min σ·ρ s.t. Nρ >= 1, ρ >= 0 together with its dual
/// max Σλ s.t. Nᵀλ <= σ, λ >= 0, by the simplex method with Bland's rule.
RestrictedSolution solve_restricted_lp(const UsageMatrix& usage,
                                       std::span<const double> sigma);

/// Mod_inf(Γ) = 1/ℓ(Γ) with witness ρ ≡ 1/ℓ(Γ); (0, ρ ≡ 0) when empty.
std::pair<double, EdgeDensity> mod_infinity(const Graph& g, const WalkFamily& family);

/// F_p(λ) = Σλ - (p-1) Σ_e σ(e) ((1/(pσ(e))) Σ_γ N(γ,e)λ(γ))^(p/(p-1)).
/// A lower bound on Mod_p of any family containing the usage rows.
/// Throws ParameterError on negative λ or p outside (1, inf).
double dual_energy(std::span<const double> lambda, const UsageMatrix& usage,
                   std::span<const double> sigma, double p);

} // namespace pmod
