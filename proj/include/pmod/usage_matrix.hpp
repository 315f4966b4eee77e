#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "pmod/walk.hpp"

namespace pmod {

/// N(γ, e): how many times walk γ traverses edge e.
std::vector<int> usage_row(const Walk& walk, std::size_t edge_count);

/// Usage rows of a finite subfamily, stored densely (row-major doubles) so
/// that the solver kernels can stream over them.
class UsageMatrix {
public:
  explicit UsageMatrix(std::size_t edge_count) : cols_(edge_count) {}

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool empty() const noexcept { return rows_ == 0; }

  /// Throws InputError if the walk references an edge >= cols().
  void add_row(const Walk& walk);
  /// Raw counts; throws InputError on negative entries, a wrong width or
  /// an all-zero row.
  void add_row(std::span<const int> counts);

  std::span<const double> row(std::size_t i) const {
    return {data_.data() + i * cols_, cols_};
  }
  int count(std::size_t i, std::size_t e) const {
    return static_cast<int>(data_[i * cols_ + e]);
  }
  /// ℓ(γ) for row i.
  std::size_t hops(std::size_t i) const;

  /// out[i] = sum_e N(i, e) rho(e).
  void row_lengths(std::span<const double> rho, std::span<double> out) const;
  /// flux[e] = sum_i N(i, e) lambda(i).
  void flux(std::span<const double> lambda, std::span<double> flux) const;

private:
  std::size_t cols_;
  std::size_t rows_ = 0;
  std::vector<double> data_;
};

} // namespace pmod
