#include <atomic>

#include "kernels_impl.hpp"
#include "pmod/errors.hpp"
#include "pmod/kernels.hpp"

namespace pmod::kernels {
namespace {

constexpr Table kScalar{
    Isa::scalar,
    detail::dot_scalar,
    detail::weighted_dot_scalar,
    detail::axpy_scalar,
    detail::weighted_abs_sum_scalar,
    detail::weighted_sq_sum_scalar,
    detail::max_abs_scalar,
};

#if defined(PMOD_HAVE_AVX2)
constexpr Table kAvx2{
    Isa::avx2,
    detail::dot_avx2,
    detail::weighted_dot_avx2,
    detail::axpy_avx2,
    detail::weighted_abs_sum_avx2,
    detail::weighted_sq_sum_avx2,
    detail::max_abs_avx2,
};

bool cpu_has_avx2() noexcept {
  __builtin_cpu_init();
  return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
}
#endif

const Table* detect() noexcept {
#if defined(PMOD_HAVE_AVX2)
  if (cpu_has_avx2()) return &kAvx2;
#endif
  return &kScalar;
}

std::atomic<const Table*>& current() noexcept {
  static std::atomic<const Table*> table{detect()};
  return table;
}

} // namespace

const Table& scalar_table() noexcept { return kScalar; }

const Table* avx2_table() noexcept {
#if defined(PMOD_HAVE_AVX2)
  static const bool ok = cpu_has_avx2();
  return ok ? &kAvx2 : nullptr;
#else
  return nullptr;
#endif
}

bool supported(Isa isa) noexcept {
  return isa == Isa::scalar || avx2_table() != nullptr;
}

const Table& table(Isa isa) {
  if (isa == Isa::scalar) return kScalar;
  if (const Table* t = avx2_table()) return *t;
  throw ParameterError("AVX2 kernels are not available on this machine");
}

const Table& active() noexcept { return *current().load(std::memory_order_relaxed); }

void select(Isa isa) { current().store(&table(isa), std::memory_order_relaxed); }

const char* name(Isa isa) noexcept { return isa == Isa::avx2 ? "avx2" : "scalar"; }

} // namespace pmod::kernels
