#include "specshare/kernels.hpp"

#include <stdexcept>

#include "specshare/detail/batch.hpp"

namespace specshare::kernels {

ErgodicSums ergodic_sums_scalar(const detail::BatchParams&, const double*,
                                const double*, std::size_t);
OutageSums outage_sums_scalar(const detail::BatchParams&, const double*,
                              const double*, std::size_t);
#if defined(__x86_64__) || defined(_M_X64)
ErgodicSums ergodic_sums_avx2(const detail::BatchParams&, const double*,
                              const double*, std::size_t);
OutageSums outage_sums_avx2(const detail::BatchParams&, const double*,
                            const double*, std::size_t);
#endif

const char* to_string(Backend b) {
  switch (b) {
    case Backend::scalar: return "scalar";
    case Backend::avx2: return "avx2";
  }
  return "?";
}

bool available(Backend b) {
  if (b == Backend::scalar) return true;
#if defined(__x86_64__) || defined(_M_X64)
  return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
  return false;
#endif
}

Backend preferred() {
  return available(Backend::avx2) ? Backend::avx2 : Backend::scalar;
}

namespace {
void check_backend(Backend b) {
  if (!available(b))
    throw std::runtime_error("kernel backend not available on this CPU");
}

void check_sizes(std::span<const double> g0, std::span<const double> g1) {
  if (g0.size() != g1.size())
    throw std::invalid_argument("kernel batch: g0/g1 size mismatch");
}
}  // namespace

ErgodicSums ergodic_sums(const PolicyContext& ctx, std::span<const double> g0,
                         std::span<const double> g1, Backend backend) {
  if (ctx.objective != ObjectiveKind::ergodic)
    throw std::invalid_argument("ergodic_sums: objective must be ergodic");
  check_backend(backend);
  check_sizes(g0, g1);
  const auto bp = detail::BatchParams::from(ctx);
#if defined(__x86_64__) || defined(_M_X64)
  if (backend == Backend::avx2)
    return ergodic_sums_avx2(bp, g0.data(), g1.data(), g0.size());
#endif
  return ergodic_sums_scalar(bp, g0.data(), g1.data(), g0.size());
}

OutageSums outage_sums(const PolicyContext& ctx, std::span<const double> g0,
                       std::span<const double> g1, Backend backend) {
  if (ctx.objective != ObjectiveKind::outage)
    throw std::invalid_argument("outage_sums: objective must be outage");
  check_backend(backend);
  check_sizes(g0, g1);
  const auto bp = detail::BatchParams::from(ctx);
#if defined(__x86_64__) || defined(_M_X64)
  if (backend == Backend::avx2)
    return outage_sums_avx2(bp, g0.data(), g1.data(), g0.size());
#endif
  return outage_sums_scalar(bp, g0.data(), g1.data(), g0.size());
}

}  // namespace specshare::kernels
