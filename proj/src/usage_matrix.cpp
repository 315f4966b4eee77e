#include "pmod/usage_matrix.hpp"

#include <algorithm>
#include <string>

#include "pmod/errors.hpp"
#include "pmod/kernels.hpp"

namespace pmod {

std::vector<int> usage_row(const Walk& walk, std::size_t edge_count) {
  std::vector<int> row(edge_count, 0);
  for (EdgeId e : walk.edges()) {
    if (e >= edge_count) throw InputError("walk uses edge " + std::to_string(e) + " outside the graph");
    ++row[e];
  }
  return row;
}

void UsageMatrix::add_row(const Walk& walk) {
  const auto counts = usage_row(walk, cols_);
  add_row(counts);
}

void UsageMatrix::add_row(std::span<const int> counts) {
  if (counts.size() != cols_) throw InputError("usage row has the wrong width");
  if (std::any_of(counts.begin(), counts.end(), [](int c) { return c < 0; })) {
    throw InputError("usage counts must be nonnegative");
  }
  if (std::none_of(counts.begin(), counts.end(), [](int c) { return c > 0; })) {
    throw InputError("usage row must traverse at least one edge");
  }
  data_.insert(data_.end(), counts.begin(), counts.end());
  ++rows_;
}

std::size_t UsageMatrix::hops(std::size_t i) const {
  std::size_t total = 0;
  for (double c : row(i)) total += static_cast<std::size_t>(c);
  return total;
}

void UsageMatrix::row_lengths(std::span<const double> rho, std::span<double> out) const {
  for (std::size_t i = 0; i < rows_; ++i) out[i] = kernels::dot(row(i), rho);
}

void UsageMatrix::flux(std::span<const double> lambda, std::span<double> out) const {
  std::fill(out.begin(), out.end(), 0.0);
  for (std::size_t i = 0; i < rows_; ++i) {
    if (lambda[i] != 0.0) kernels::axpy(lambda[i], row(i), out);
  }
}

} // namespace pmod
