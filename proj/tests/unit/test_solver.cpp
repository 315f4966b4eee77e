#include "doctest.h"

#include <cmath>
#include <random>

#include "enumerate.hpp"
#include "pmod/errors.hpp"
#include "pmod/oracles.hpp"
#include "pmod/solver.hpp"
#include "random_graphs.hpp"

using namespace pmod;
using pmod::testing::complete_graph;
using pmod::testing::parallel_paths;

namespace {

WalkFamily st_family(const Graph& g) {
  return WalkFamily::connecting(g, g.vertex("s"), g.vertex("t"));
}

void check_bounds(const ModulusResult& r, double tol) {
  CHECK(r.dual_lower <= r.value);
  CHECK(r.value <= r.primal_upper);
  CHECK(r.gap >= 0.0);
  CHECK(r.primal_upper - r.dual_lower <= tol * std::max(1.0, r.value) * (1 + 1e-9));
}

} // namespace

TEST_CASE("parallel paths have the closed-form modulus") {
  const Graph pp = parallel_paths(3, 2);
  const auto fam = st_family(pp);
  const double expected[] = {3.0, 1.5, 0.75};
  for (int i = 0; i < 3; ++i) {
    const auto r = modulus(pp, fam, 1.0 + i, 1e-10);
    CHECK(r.value == doctest::Approx(expected[i]).epsilon(1e-9));
    for (double x : r.rho_star.values()) CHECK(x == doctest::Approx(0.5).epsilon(1e-6));
    check_bounds(r, 1e-10);
  }
  const auto inf = modulus(pp, fam, Exponent::infinity());
  CHECK(inf.value == 0.5);
  CHECK(inf.lambda.size() == 1);
}

TEST_CASE("single edge of weight five") {
  const Graph g(false, {"s", "t"}, {{0, 1}}, {5.0});
  for (double p : {1.0, 1.5, 2.0, 4.0, 10.0}) {
    const auto r = modulus(g, st_family(g), p, 1e-10);
    CHECK(r.value == doctest::Approx(5.0).epsilon(1e-9));
    CHECK(r.rho_star[0] == doctest::Approx(1.0).epsilon(1e-9));
  }
}

TEST_CASE("K4 modulus matches the reference oracles") {
  const Graph k4 = complete_graph(4);
  const auto fam = WalkFamily::connecting(k4, 0, 3);
  CHECK(modulus(k4, fam, 2.0, 1e-10).value == doctest::Approx(2.0).epsilon(1e-9));
  CHECK(modulus(k4, fam, 1.0, 1e-10).value == doctest::Approx(3.0).epsilon(1e-9));
  CHECK(modulus(k4, fam, Exponent::infinity()).value == 1.0);
}

TEST_CASE("restricted program examples") {
  {
    UsageMatrix n(1);
    const int row[] = {1};
    n.add_row(row);
    for (double p : {1.5, 2.0, 3.0}) {
      const std::vector<double> sigma{1.0};
      const auto r = solve_restricted_program(n, sigma, p, 1e-12);
      CHECK(r.rho[0] == doctest::Approx(1.0).epsilon(1e-6));
      CHECK(r.lambda[0] == doctest::Approx(p).epsilon(1e-6));
    }
  }
  {
    UsageMatrix n(2);
    const int row[] = {1, 1};
    n.add_row(row);
    const std::vector<double> sigma{1.0, 4.0};
    const auto r = solve_restricted_program(n, sigma, 2.0, 1e-12);
    CHECK(r.rho[0] == doctest::Approx(0.8).epsilon(1e-6));
    CHECK(r.rho[1] == doctest::Approx(0.2).epsilon(1e-6));
    CHECK(r.dual_value == doctest::Approx(0.8).epsilon(1e-10));
    CHECK(r.primal_value == doctest::Approx(0.8).epsilon(1e-10));
  }
  {
    const Graph pp = parallel_paths(3, 2);
    UsageMatrix n(6);
    for (int i = 0; i < 3; ++i) {
      const int row[6] = {i == 0, i == 0, i == 1, i == 1, i == 2, i == 2};
      n.add_row(row);
    }
    const std::vector<double> sigma(6, 1.0);
    const auto r = solve_restricted_program(n, sigma, 2.0, 1e-12);
    for (double x : r.rho.values()) CHECK(x == doctest::Approx(0.5).epsilon(1e-6));
    for (double l : r.lambda) CHECK(l == doctest::Approx(1.0).epsilon(1e-6));
    CHECK(r.dual_value == doctest::Approx(1.5).epsilon(1e-10));
    const auto lp = solve_restricted_lp(n, sigma);
    CHECK(lp.dual_value == doctest::Approx(3.0));
    CHECK(lp.primal_value == doctest::Approx(3.0));
  }
}

TEST_CASE("restricted LP examples") {
  {
    UsageMatrix n(1);
    const int row[] = {1};
    n.add_row(row);
    const std::vector<double> sigma{7.0};
    const auto r = solve_restricted_lp(n, sigma);
    CHECK(r.dual_value == doctest::Approx(7.0));
    CHECK(r.rho[0] == doctest::Approx(1.0));
    CHECK(r.lambda[0] == doctest::Approx(7.0));
  }
  {
    const Graph k3 = complete_graph(3);
    UsageMatrix n(3);
    for (const auto& w : pmod::testing::simple_paths(k3, 0, 1)) n.add_row(w);
    CHECK(n.rows() == 2);
    const std::vector<double> sigma(3, 1.0);
    const auto r = solve_restricted_lp(n, sigma);
    CHECK(r.dual_value == doctest::Approx(2.0));
    CHECK(r.primal_value == doctest::Approx(2.0));
    CHECK(r.dual_value == doctest::Approx(max_flow_min_cut(k3, 0, 1).value));
  }
}

TEST_CASE("infinity modulus") {
  const Graph pp = parallel_paths(3, 2);
  const auto [v, rho] = mod_infinity(pp, st_family(pp));
  CHECK(v == 0.5);
  CHECK(rho[0] == 0.5);
  const Graph k4 = complete_graph(4);
  CHECK(mod_infinity(k4, WalkFamily::connecting(k4, 0, 1)).first == 1.0);
  CHECK(mod_infinity(k4, WalkFamily::via_vertex(k4, 0, 1, 3)).first == 0.5);
  const Graph two(false, {"s", "t"}, {}, {});
  CHECK(mod_infinity(two, WalkFamily::connecting(two, 0, 1)).first == 0.0);
}

TEST_CASE("dual energy") {
  const Graph pp = parallel_paths(3, 2);
  UsageMatrix n(6);
  for (int i = 0; i < 3; ++i) {
    const int row[6] = {i == 0, i == 0, i == 1, i == 1, i == 2, i == 2};
    n.add_row(row);
  }
  const std::vector<double> sigma(6, 1.0);
  CHECK(dual_energy(std::vector<double>(3, 0.0), n, sigma, 2.0) == 0.0);
  CHECK(dual_energy(std::vector<double>(3, 1.0), n, sigma, 2.0) == doctest::Approx(1.5));
  CHECK_THROWS_AS(dual_energy(std::vector<double>{1.0, -1.0, 1.0}, n, sigma, 2.0),
                  ParameterError);
  CHECK_THROWS_AS(dual_energy(std::vector<double>(3, 1.0), n, sigma, 1.0), ParameterError);

  // Weak duality on K4 over random multipliers.
  const Graph k4 = complete_graph(4);
  const auto paths = pmod::testing::simple_paths(k4, 0, 3);
  UsageMatrix kn(k4.edge_count());
  for (const auto& w : paths) kn.add_row(w);
  const double mod = modulus(k4, WalkFamily::connecting(k4, 0, 3), 2.0, 1e-10).value;
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> d(0.0, 3.0);
  for (int i = 0; i < 100; ++i) {
    std::vector<double> lambda(paths.size());
    for (double& x : lambda) x = d(rng);
    CHECK(dual_energy(lambda, kn, k4.sigma(), 2.0) <= mod + 1e-10);
  }
}

TEST_CASE("modulus scales linearly in sigma") {
  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 10; ++trial) {
    pmod::testing::RandomGraphSpec spec;
    spec.n = 5 + trial % 4;
    spec.sigma_lo = 0.5;
    spec.sigma_hi = 2.0;
    const Graph g = pmod::testing::random_connected_graph(rng, spec);
    const auto fam = WalkFamily::connecting(g, 0, static_cast<VertexId>(g.vertex_count() - 1));
    std::vector<double> sigma(g.sigma().begin(), g.sigma().end());
    for (double& x : sigma) x *= 3.0;
    const Graph h = g.with_sigma(sigma);
    for (double p : {1.0, 1.5, 2.0, 3.0}) {
      const double a = modulus(g, fam, p, 1e-10).value;
      const double b = modulus(h, fam, p, 1e-10).value;
      CHECK(b == doctest::Approx(3.0 * a).epsilon(1e-8));
    }
  }
}

TEST_CASE("modulus agrees with brute force over simple paths") {
  std::mt19937_64 rng(12);
  for (int trial = 0; trial < 15; ++trial) {
    pmod::testing::RandomGraphSpec spec;
    spec.n = 4 + trial % 4;
    spec.extra_edge_prob = 0.4;
    spec.sigma_lo = 0.3;
    spec.sigma_hi = 3.0;
    const Graph g = pmod::testing::random_connected_graph(rng, spec);
    const VertexId t = static_cast<VertexId>(g.vertex_count() - 1);
    const auto fam = WalkFamily::connecting(g, 0, t);
    for (double p : {1.0, 1.3, 2.0, 5.0}) {
      const auto r = modulus(g, fam, p, 1e-10);
      CHECK(r.value ==
            doctest::Approx(pmod::testing::brute_force_modulus(g, 0, t, p)).epsilon(1e-8));
      check_bounds(r, 1e-10);
      CHECK(family_rho_length(g, fam, r.rho_star) >= 1.0 - 1e-12);
    }
  }
}

TEST_CASE("degenerate inputs and errors") {
  const Graph two(false, {"s", "t"}, {}, {});
  const auto empty = WalkFamily::connecting(two, 0, 1);
  for (Exponent p : {Exponent(1.0), Exponent(2.0), Exponent::infinity()}) {
    const auto r = modulus(two, empty, p);
    CHECK(r.value == 0.0);
    CHECK(r.rho_star.size() == 0);
  }
  const Graph k4 = complete_graph(4);
  const auto fam = WalkFamily::connecting(k4, 0, 3);
  CHECK_THROWS_AS(modulus(k4, fam, 0.5), ParameterError);
  CHECK_THROWS_AS(modulus(k4, fam, 2.0, 0.0), ParameterError);
  CHECK_THROWS_AS(modulus(k4, fam, 2.0, -1.0), ParameterError);

  SolverOptions opts;
  opts.tol = 1e-10;
  opts.max_outer_iterations = 1;
  for (double p : {1.0, 2.0}) {
    try {
      (void)modulus(k4, fam, p, opts);
      FAIL("expected NonConvergence");
    } catch (const NonConvergence& e) {
      CHECK(e.dual_lower() <= e.primal_upper());
      CHECK(e.iterations() >= 1);
    }
  }
}

TEST_CASE("near one the result is flagged ill conditioned") {
  const Graph pp = parallel_paths(2, 3);
  const auto r = modulus(pp, st_family(pp), 1.02, 1e-8);
  CHECK(r.ill_conditioned);
  CHECK(r.value == doctest::Approx(2.0 / std::pow(3.0, 0.02)).epsilon(1e-7));
  CHECK_FALSE(modulus(pp, st_family(pp), 2.0).ill_conditioned);
}

TEST_CASE("canonical density at p = 1 can be switched off") {
  const Graph pp = parallel_paths(3, 2);
  SolverOptions opts;
  opts.tol = 1e-10;
  opts.canonical_p1_density = false;
  const auto r = modulus(pp, st_family(pp), 1.0, opts);
  CHECK(r.value == doctest::Approx(3.0));
  CHECK(family_rho_length(pp, st_family(pp), r.rho_star) >= 1.0 - 1e-12);
}
