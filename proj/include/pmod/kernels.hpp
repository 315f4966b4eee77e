#pragma once

// Dense per-edge arithmetic used by the inner solvers. Each kernel has a
// scalar reference version and, on x86-64, an AVX2/FMA version chosen at
// runtime from CPUID. Vector variants may reassociate sums, so results
// agree with the scalar ones to rounding, not bit for bit.

#include <cassert>
#include <cstddef>
#include <span>

namespace pmod::kernels {

enum class Isa { scalar, avx2 };

struct Table {
  Isa isa;
  /// sum a[i] * b[i]
  double (*dot)(const double* a, const double* b, std::size_t n);
  /// sum w[i] * a[i] * b[i]
  double (*weighted_dot)(const double* w, const double* a, const double* b, std::size_t n);
  /// y[i] += alpha * x[i]
  void (*axpy)(double alpha, const double* x, double* y, std::size_t n);
  /// sum w[i] * |x[i]|
  double (*weighted_abs_sum)(const double* w, const double* x, std::size_t n);
  /// sum w[i] * x[i]^2
  double (*weighted_sq_sum)(const double* w, const double* x, std::size_t n);
  /// max |x[i]|, 0 for n == 0
  double (*max_abs)(const double* x, std::size_t n);
};

const Table& scalar_table() noexcept;
/// nullptr when the build or the CPU lacks AVX2/FMA.
const Table* avx2_table() noexcept;

bool supported(Isa isa) noexcept;
const Table& table(Isa isa);

/// Table used by the span wrappers below. Defaults to the widest
/// supported ISA.
const Table& active() noexcept;
/// Overrides the runtime choice (tests, benchmarking). Throws
/// ParameterError if the ISA is not supported here.
void select(Isa isa);
const char* name(Isa isa) noexcept;

inline double dot(std::span<const double> a, std::span<const double> b) {
  assert(a.size() == b.size());
  return active().dot(a.data(), b.data(), a.size());
}

inline double weighted_dot(std::span<const double> w, std::span<const double> a,
                           std::span<const double> b) {
  assert(w.size() == a.size() && a.size() == b.size());
  return active().weighted_dot(w.data(), a.data(), b.data(), a.size());
}

inline void axpy(double alpha, std::span<const double> x, std::span<double> y) {
  assert(x.size() == y.size());
  active().axpy(alpha, x.data(), y.data(), x.size());
}

inline double weighted_abs_sum(std::span<const double> w, std::span<const double> x) {
  assert(w.size() == x.size());
  return active().weighted_abs_sum(w.data(), x.data(), x.size());
}

inline double weighted_sq_sum(std::span<const double> w, std::span<const double> x) {
  assert(w.size() == x.size());
  return active().weighted_sq_sum(w.data(), x.data(), x.size());
}

inline double max_abs(std::span<const double> x) {
  return active().max_abs(x.data(), x.size());
}

} // namespace pmod::kernels
