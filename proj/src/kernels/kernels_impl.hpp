#pragma once

#include <cstddef>

namespace pmod::kernels::detail {

double dot_scalar(const double* a, const double* b, std::size_t n);
double weighted_dot_scalar(const double* w, const double* a, const double* b, std::size_t n);
void axpy_scalar(double alpha, const double* x, double* y, std::size_t n);
double weighted_abs_sum_scalar(const double* w, const double* x, std::size_t n);
double weighted_sq_sum_scalar(const double* w, const double* x, std::size_t n);
double max_abs_scalar(const double* x, std::size_t n);

#if defined(PMOD_HAVE_AVX2)
double dot_avx2(const double* a, const double* b, std::size_t n);
double weighted_dot_avx2(const double* w, const double* a, const double* b, std::size_t n);
void axpy_avx2(double alpha, const double* x, double* y, std::size_t n);
double weighted_abs_sum_avx2(const double* w, const double* x, std::size_t n);
double weighted_sq_sum_avx2(const double* w, const double* x, std::size_t n);
double max_abs_avx2(const double* x, std::size_t n);
#endif

} // namespace pmod::kernels::detail
