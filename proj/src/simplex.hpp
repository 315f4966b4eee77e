#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace pmod::detail {

/// Dense tableau simplex for
///
///   maximize sum_j lambda(j)  subject to  sum_j a_j lambda(j) <= sigma,  lambda >= 0,
///
/// with sigma > 0 and nonnegative columns a_j, so the slack basis is
/// feasible from the start and no phase one is needed. Bland's rule picks
/// entering and leaving variables, which rules out cycling on the
/// (typically very degenerate) path-flow problems. Columns can be appended
/// after a solve; the current basis stays feasible and pivoting resumes.
///
/// The row prices of the final tableau solve the primal
/// min sigma . rho  s.t.  a_j . rho >= 1, rho >= 0.
class PathLp {
public:
  explicit PathLp(std::span<const double> sigma);

  void add_column(std::span<const double> column);
  std::size_t columns() const noexcept { return columns_.size(); }

  /// Pivots to optimality. Returns false if the pivot budget ran out.
  bool solve();

  std::vector<double> lambda() const;
  /// Row prices (the primal density), clamped at zero.
  std::vector<double> prices() const;
  double objective() const;

private:
  void rebuild();
  void pivot(std::size_t row, std::size_t col);
  bool pivot_to_optimal();

  std::size_t m_;
  std::vector<double> sigma_;
  std::vector<std::vector<double>> columns_; // original walk columns
  // Tableau rows: m_ slack columns then one column per walk; rhs separate.
  std::vector<std::vector<double>> rows_;
  std::vector<double> rhs_;
  std::vector<double> reduced_; // c_j - c_B B^-1 a_j
  std::vector<std::size_t> basis_; // variable index per row
};

} // namespace pmod::detail
