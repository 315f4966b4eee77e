#pragma once

// Projected Newton ascent on the Lagrange dual of
//
//   minimize  sum_e h_e(rho(e))   subject to  N rho >= 1
//
// for a separable convex penalty h_e. With y = N^T lambda the dual is
//
//   F(lambda) = sum_i lambda(i) - sum_e h_e^*(y(e)),   lambda >= 0,
//
// its gradient is 1 - N rho_lambda with rho_lambda(e) = (h_e^*)'(y(e)), and
// its Hessian is -N diag(d rho / d y) N^T. Bound-constrained ascent follows
// the projected Newton method: variables at (or about to hit) zero with an
// outward gradient take a diagonally scaled step, the rest a regularized
// Newton step, and an Armijo search runs along the projection arc.
//
// Rows that sit at lambda = 0 while violated are first brought to the
// coordinate-wise maximum by a log-scale bisection; this is how new rows
// from constraint generation get a starting weight.

#include <Eigen/Cholesky>
#include <Eigen/Core>

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <span>
#include <vector>

#include "pmod/kernels.hpp"
#include "pmod/usage_matrix.hpp"

namespace pmod::detail {

/// h(rho) = sigma rho^p on rho >= 0, 1 < p < inf.
struct PowerPenalty {
  PowerPenalty(double p_, std::span<const double> sigma_)
      : p(p_), sigma(sigma_), inv_pm1(1.0 / (p_ - 1.0)) {}

  double rho(std::size_t e, double y) const {
    return y > 0.0 ? std::pow(y / (p * sigma[e]), inv_pm1) : 0.0;
  }
  /// h^*(y) = (p-1) sigma (y/(p sigma))^(p/(p-1)), written via rho(y).
  double conjugate(std::size_t, double y, double r) const {
    return y > 0.0 ? (p - 1.0) / p * y * r : 0.0;
  }
  /// d rho / d y; finite stand-in at y = 0 when p > 2.
  double slope(std::size_t e, double y, double r, double y_floor) const {
    if (y > 0.0) return r * inv_pm1 / y;
    if (p < 2.0) return 0.0;
    if (p == 2.0) return 1.0 / (2.0 * sigma[e]);
    const double yf = std::max(y_floor, std::numeric_limits<double>::min());
    return this->rho(e, yf) * inv_pm1 / yf;
  }
  double primal(std::size_t e, double r) const { return sigma[e] * std::pow(r, p); }

  double p;
  std::span<const double> sigma;
  double inv_pm1;
};

/// h(rho) = sigma rho + (eps/2) rho^2 on rho >= 0: the linear energy with a
/// small Euclidean term, whose minimizer is the least-norm minimizer of the
/// linear energy once eps is small enough.
struct RegularizedLinearPenalty {
  RegularizedLinearPenalty(double eps_, std::span<const double> sigma_)
      : eps(eps_), sigma(sigma_) {}

  double rho(std::size_t e, double y) const { return std::max(0.0, (y - sigma[e]) / eps); }
  double conjugate(std::size_t e, double y, double) const {
    const double over = std::max(0.0, y - sigma[e]);
    return over * over / (2.0 * eps);
  }
  double slope(std::size_t e, double y, double, double) const {
    return y > sigma[e] ? 1.0 / eps : 0.0;
  }
  double primal(std::size_t e, double r) const { return sigma[e] * r + 0.5 * eps * r * r; }

  double eps;
  std::span<const double> sigma;
};

struct DualNewtonStatus {
  bool converged = false;
  std::size_t iterations = 0;
};

template <class Penalty>
class DualNewton {
public:
  DualNewton(const UsageMatrix& usage, Penalty penalty)
      : usage_(usage), penalty_(std::move(penalty)) {}

  /// Picks up rows appended to the usage matrix since the last call; they
  /// start at lambda = 0.
  void sync_rows() {
    lambda_.resize(usage_.rows(), 0.0);
    evaluate(lambda_, state_);
  }

  const std::vector<double>& lambda() const noexcept { return lambda_; }
  std::span<const double> rho() const noexcept { return state_.rho; }
  double dual_value() const noexcept { return state_.dual; }
  /// Smallest N rho over the active rows.
  double min_row_length() const noexcept { return state_.min_row; }
  /// Penalty of rho / min_row_length: feasible for every active row.
  double restricted_upper() const noexcept { return state_.upper; }
  double restricted_gap() const noexcept { return state_.upper - state_.dual; }
  std::size_t total_iterations() const noexcept { return total_iterations_; }

  /// Ascends until (upper - F) <= tol * upper or the iteration budget runs
  /// out; never throws.
  DualNewtonStatus solve(double tol, std::size_t max_iterations) {
    sync_rows();
    DualNewtonStatus status;
    const std::size_t k = usage_.rows();
    if (k == 0) return status;

    std::vector<double> grad(k), hdiag(k), mu(k), slope(usage_.cols()), direction(k);
    State trial;
    for (std::size_t it = 0; it < max_iterations; ++it) {
      activate_violated_zero_rows();
      if (converged(tol)) {
        status.converged = true;
        break;
      }
      ++status.iterations;
      ++total_iterations_;

      for (std::size_t i = 0; i < k; ++i) grad[i] = 1.0 - state_.row_len[i]; // dF/dlambda
      const double y_floor = 1e-14 * state_.max_flux;
      for (std::size_t e = 0; e < usage_.cols(); ++e) {
        slope[e] = penalty_.slope(e, state_.flux[e], state_.rho[e], y_floor);
      }
      double scale = 0.0;
      for (std::size_t i = 0; i < k; ++i) {
        hdiag[i] = kernels::weighted_dot(slope, usage_.row(i), usage_.row(i));
        scale = std::max(scale, hdiag[i]);
      }
      if (scale == 0.0) scale = 1.0;
      double floor = scale;
      for (std::size_t i = 0; i < k; ++i) {
        if (hdiag[i] > 0.0) floor = std::min(floor, hdiag[i]);
      }

      bool accepted = false;
      for (int attempt = 0; attempt < 8 && !accepted; ++attempt) {
        // Rows held at zero by an outward gradient do not count towards the
        // damping; otherwise inactive rows keep it large forever.
        const double gnorm = projected_gradient(lambda_, state_);
        // Marquardt scaling: the damping is relative to each diagonal entry,
        // so one very stiff row does not freeze the others.
        const double rel = damping_ + std::min(1e-2, gnorm);
        for (std::size_t i = 0; i < k; ++i) mu[i] = rel * (hdiag[i] > 0.0 ? hdiag[i] : floor);

        // Bound set: an outward gradient and lambda within one diagonal step of 0.
        std::vector<std::size_t> free_idx;
        for (std::size_t i = 0; i < k; ++i) {
          const bool bound = grad[i] < 0.0 && lambda_[i] <= -grad[i] / (hdiag[i] + mu[i]);
          if (bound) {
            direction[i] = grad[i] / (hdiag[i] + mu[i]);
          } else {
            free_idx.push_back(i);
          }
        }
        const auto nf = static_cast<Eigen::Index>(free_idx.size());
        if (nf > 0) {
          Eigen::MatrixXd h(nf, nf);
          Eigen::VectorXd rhs(nf);
          std::vector<double> weighted(usage_.cols());
          for (Eigen::Index a = 0; a < nf; ++a) {
            const auto ra = usage_.row(free_idx[a]);
            for (std::size_t e = 0; e < weighted.size(); ++e) weighted[e] = slope[e] * ra[e];
            for (Eigen::Index b = a; b < nf; ++b) {
              const double v = kernels::dot(weighted, usage_.row(free_idx[b]));
              h(a, b) = v;
              h(b, a) = v;
            }
            h(a, a) += mu[free_idx[a]];
            rhs(a) = grad[free_idx[a]];
          }
          // Jacobi scaling keeps the factorization accurate when the row
          // curvatures span many orders of magnitude.
          const Eigen::VectorXd dinv = h.diagonal().cwiseSqrt().cwiseInverse();
          const Eigen::MatrixXd hs = dinv.asDiagonal() * h * dinv.asDiagonal();
          Eigen::LLT<Eigen::MatrixXd> llt(hs);
          if (llt.info() != Eigen::Success) {
            damping_ = std::min(1.0, damping_ * 100.0);
            continue;
          }
          const Eigen::VectorXd d = dinv.cwiseProduct(llt.solve(dinv.cwiseProduct(rhs)));
          for (Eigen::Index a = 0; a < nf; ++a) direction[free_idx[a]] = d(a);
        }

        // Armijo search along the projection arc.
        double alpha = 1.0;
        for (int ls = 0; ls < 60; ++ls, alpha *= 0.5) {
          trial.lambda.resize(k);
          double predicted = 0.0;
          for (std::size_t i = 0; i < k; ++i) {
            trial.lambda[i] = std::max(0.0, lambda_[i] + alpha * direction[i]);
            predicted += grad[i] * (trial.lambda[i] - lambda_[i]);
          }
          if (predicted <= 0.0) break;
          evaluate(trial.lambda, trial);
          // Once the predicted increase is lost in the rounding of F, progress
          // is judged by the projected gradient instead.
          const bool rounding = predicted <= 1e-13 * std::abs(state_.dual);
          const bool armijo = !rounding && trial.dual >= state_.dual + 1e-4 * predicted;
          const bool tighter = (trial.upper - trial.dual) < (state_.upper - state_.dual) &&
                               trial.dual >= state_.dual;
          const bool stationary = rounding && projected_gradient(trial.lambda, trial) <
                                                  projected_gradient(lambda_, state_);
          if (armijo || tighter || stationary) {
            accepted = true;
            break;
          }
        }
        if (accepted) {
          lambda_ = trial.lambda;
          std::swap(state_, trial);
          damping_ = alpha == 1.0 ? std::max(1e-14, damping_ * 0.1) : damping_;
        } else {
          damping_ = std::min(1.0, damping_ * 100.0);
        }
      }
      if (!accepted) break; // stalled at rounding level
    }
    if (!status.converged) status.converged = converged(tol);
    return status;
  }

private:
  struct State {
    std::vector<double> lambda;
    std::vector<double> flux;
    std::vector<double> rho;
    std::vector<double> row_len;
    double dual = 0.0;
    double upper = std::numeric_limits<double>::infinity();
    double min_row = 0.0;
    double max_flux = 0.0;
  };

  static double projected_gradient(std::span<const double> lambda, const State& s) {
    double norm = 0.0;
    for (std::size_t i = 0; i < lambda.size(); ++i) {
      const double g = 1.0 - s.row_len[i];
      norm = std::max(norm, lambda[i] > 0.0 ? std::abs(g) : std::max(0.0, g));
    }
    return norm;
  }

  bool converged(double tol) const {
    return std::isfinite(state_.upper) && state_.upper - state_.dual <= tol * state_.upper;
  }

  void evaluate(std::span<const double> lambda, State& s) const {
    const std::size_t m = usage_.cols();
    const std::size_t k = usage_.rows();
    s.flux.resize(m);
    s.rho.resize(m);
    s.row_len.resize(k);
    usage_.flux(lambda, s.flux);
    double conj = 0.0;
    s.max_flux = 0.0;
    for (std::size_t e = 0; e < m; ++e) {
      s.rho[e] = penalty_.rho(e, s.flux[e]);
      conj += penalty_.conjugate(e, s.flux[e], s.rho[e]);
      s.max_flux = std::max(s.max_flux, s.flux[e]);
    }
    double total = 0.0;
    for (double l : lambda) total += l;
    s.dual = total - conj;
    usage_.row_lengths(s.rho, s.row_len);
    s.min_row = k ? *std::min_element(s.row_len.begin(), s.row_len.end()) : 0.0;
    if (s.min_row > 0.0 && std::isfinite(s.min_row)) {
      double upper = 0.0;
      for (std::size_t e = 0; e < m; ++e) {
        if (s.rho[e] != 0.0) upper += penalty_.primal(e, s.rho[e] / s.min_row);
      }
      s.upper = upper;
    } else {
      s.upper = std::numeric_limits<double>::infinity();
    }
  }

  // Coordinate maximization of F in lambda(i) for rows at zero that are
  // violated; d F / d lambda(i) = 1 - (N rho)(i) is decreasing in lambda(i).
  void activate_violated_zero_rows() {
    bool changed = false;
    for (std::size_t i = 0; i < usage_.rows(); ++i) {
      if (lambda_[i] != 0.0 || state_.row_len[i] >= 1.0) continue;
      const auto row = usage_.row(i);
      std::vector<std::pair<std::size_t, double>> nz;
      for (std::size_t e = 0; e < row.size(); ++e) {
        if (row[e] != 0.0) nz.emplace_back(e, row[e]);
      }
      auto length_at = [&](double t) {
        double len = 0.0;
        for (auto [e, c] : nz) len += c * penalty_.rho(e, state_.flux[e] + t * c);
        return len;
      };
      double lo = std::log(1e-300), hi = std::log(1e300);
      if (length_at(std::exp(hi)) < 1.0) continue;
      for (int it = 0; it < 80; ++it) {
        const double mid = 0.5 * (lo + hi);
        (length_at(std::exp(mid)) < 1.0 ? lo : hi) = mid;
      }
      const double t = std::exp(hi);
      lambda_[i] = t;
      for (auto [e, c] : nz) state_.flux[e] += t * c;
      // Keep row lengths current for the remaining rows.
      for (auto [e, c] : nz) state_.rho[e] = penalty_.rho(e, state_.flux[e]);
      usage_.row_lengths(state_.rho, state_.row_len);
      changed = true;
    }
    if (changed) evaluate(lambda_, state_);
  }

  const UsageMatrix& usage_;
  Penalty penalty_;
  std::vector<double> lambda_;
  State state_;
  double damping_ = 1e-8;
  std::size_t total_iterations_ = 0;
};

} // namespace pmod::detail
