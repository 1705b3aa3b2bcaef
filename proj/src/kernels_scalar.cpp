// Scalar reference backend. Compiled with -ffp-contract=off so every
// operation stays exactly as written; the AVX2 backend must reproduce these
// sums bit for bit.

#include <cmath>
#include <limits>

#include "specshare/detail/batch.hpp"

namespace specshare::kernels {

ErgodicSums ergodic_sums_scalar(const detail::BatchParams& bp, const double* g0,
                                const double* g1, std::size_t n) {
  return detail::ergodic_batch<detail::ScalarPack>(bp, g0, g1, n);
}

OutageSums outage_sums_scalar(const detail::BatchParams& bp, const double* g0,
                              const double* g1, std::size_t n) {
  return detail::outage_batch<detail::ScalarPack>(bp, g0, g1, n);
}

double log2_portable(double x) {
  if (std::isnan(x) || x < 0.0) return std::numeric_limits<double>::quiet_NaN();
  if (x == 0.0) return -std::numeric_limits<double>::infinity();
  if (x == std::numeric_limits<double>::infinity()) return x;
  double scale = 0.0;
  if (x < std::numeric_limits<double>::min()) {  // bring subnormals into range
    x *= 0x1.0p54;
    scale = -54.0;
  }
  return detail::log2_core(detail::ScalarPack{x}).v + scale;
}

}  // namespace specshare::kernels
