#include "simplex.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace pmod::detail {
namespace {
constexpr double kCostTol = 1e-11;
constexpr double kPivotTol = 1e-11;
} // namespace

PathLp::PathLp(std::span<const double> sigma)
    : m_(sigma.size()), sigma_(sigma.begin(), sigma.end()) {
  rebuild();
}

void PathLp::rebuild() {
  const std::size_t n = m_ + columns_.size();
  rows_.assign(m_, std::vector<double>(n, 0.0));
  rhs_ = sigma_;
  reduced_.assign(n, 0.0);
  basis_.resize(m_);
  for (std::size_t r = 0; r < m_; ++r) {
    rows_[r][r] = 1.0;
    basis_[r] = r;
  }
  for (std::size_t j = 0; j < columns_.size(); ++j) {
    for (std::size_t r = 0; r < m_; ++r) rows_[r][m_ + j] = columns_[j][r];
    reduced_[m_ + j] = 1.0;
  }
}

void PathLp::add_column(std::span<const double> column) {
  columns_.emplace_back(column.begin(), column.end());
  // B^-1 a sits in the slack block of the tableau.
  double reduced = 1.0;
  for (std::size_t r = 0; r < m_; ++r) {
    double v = 0.0;
    for (std::size_t e = 0; e < m_; ++e) v += rows_[r][e] * column[e];
    rows_[r].push_back(v);
  }
  for (std::size_t e = 0; e < m_; ++e) reduced += reduced_[e] * column[e];
  reduced_.push_back(reduced);
}

void PathLp::pivot(std::size_t row, std::size_t col) {
  auto& prow = rows_[row];
  const double inv = 1.0 / prow[col];
  for (double& v : prow) v *= inv;
  rhs_[row] *= inv;
  prow[col] = 1.0;
  for (std::size_t r = 0; r < m_; ++r) {
    if (r == row) continue;
    const double f = rows_[r][col];
    if (f == 0.0) continue;
    auto& cur = rows_[r];
    for (std::size_t j = 0; j < cur.size(); ++j) cur[j] -= f * prow[j];
    cur[col] = 0.0;
    rhs_[r] = std::max(0.0, rhs_[r] - f * rhs_[row]);
  }
  const double f = reduced_[col];
  for (std::size_t j = 0; j < reduced_.size(); ++j) reduced_[j] -= f * prow[j];
  reduced_[col] = 0.0;
  basis_[row] = col;
}

bool PathLp::pivot_to_optimal() {
  const std::size_t budget = 50 * (m_ + columns_.size()) + 1000;
  for (std::size_t it = 0; it < budget; ++it) {
    std::size_t enter = reduced_.size();
    for (std::size_t j = 0; j < reduced_.size(); ++j) {
      if (reduced_[j] > kCostTol) {
        enter = j;
        break;
      }
    }
    if (enter == reduced_.size()) return true;
    std::size_t leave = m_;
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t r = 0; r < m_; ++r) {
      const double a = rows_[r][enter];
      if (a <= kPivotTol) continue;
      const double ratio = rhs_[r] / a;
      const double slack = 1e-14 * std::max(1.0, std::abs(best));
      if (leave == m_ || ratio < best - slack) {
        best = ratio;
        leave = r;
      } else if (ratio <= best + slack && basis_[r] < basis_[leave]) {
        best = std::min(best, ratio);
        leave = r;
      }
    }
    // Columns are nonnegative and nonzero, so the LP is bounded.
    if (leave == m_) return false;
    pivot(leave, enter);
  }
  return false;
}

bool PathLp::solve() {
  if (pivot_to_optimal()) return true;
  // Numerical trouble: restart from the slack basis with clean data.
  rebuild();
  return pivot_to_optimal();
}

std::vector<double> PathLp::lambda() const {
  std::vector<double> out(columns_.size(), 0.0);
  for (std::size_t r = 0; r < m_; ++r) {
    if (basis_[r] >= m_) out[basis_[r] - m_] = std::max(0.0, rhs_[r]);
  }
  return out;
}

std::vector<double> PathLp::prices() const {
  std::vector<double> out(m_);
  for (std::size_t e = 0; e < m_; ++e) out[e] = std::max(0.0, -reduced_[e]);
  return out;
}

double PathLp::objective() const {
  double total = 0.0;
  for (double l : lambda()) total += l;
  return total;
}

} // namespace pmod::detail
