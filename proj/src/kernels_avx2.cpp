// AVX2 + FMA backend. Only built with vector code on x86-64; the dispatch
// layer never calls in here unless the CPU reports both features.

#if defined(__AVX2__) && defined(__FMA__)

#include <immintrin.h>

#include "specshare/detail/batch.hpp"

namespace specshare::detail {

struct AvxPack {
  __m256d v;
  using Mask = __m256d;
  static constexpr int width = 4;
  static AvxPack set1(double x) { return {_mm256_set1_pd(x)}; }
  static AvxPack load(const double* p) { return {_mm256_loadu_pd(p)}; }
};

inline AvxPack operator+(AvxPack a, AvxPack b) { return {_mm256_add_pd(a.v, b.v)}; }
inline AvxPack operator-(AvxPack a, AvxPack b) { return {_mm256_sub_pd(a.v, b.v)}; }
inline AvxPack operator*(AvxPack a, AvxPack b) { return {_mm256_mul_pd(a.v, b.v)}; }
inline AvxPack operator/(AvxPack a, AvxPack b) { return {_mm256_div_pd(a.v, b.v)}; }
inline AvxPack vmin(AvxPack a, AvxPack b) { return {_mm256_min_pd(a.v, b.v)}; }
inline AvxPack vmax(AvxPack a, AvxPack b) { return {_mm256_max_pd(a.v, b.v)}; }
inline AvxPack vfma(AvxPack a, AvxPack b, AvxPack c) {
  return {_mm256_fmadd_pd(a.v, b.v, c.v)};
}
inline __m256d cmp_lt(AvxPack a, AvxPack b) {
  return _mm256_cmp_pd(a.v, b.v, _CMP_LT_OQ);
}
inline __m256d cmp_le(AvxPack a, AvxPack b) {
  return _mm256_cmp_pd(a.v, b.v, _CMP_LE_OQ);
}
inline __m256d cmp_gt(AvxPack a, AvxPack b) {
  return _mm256_cmp_pd(a.v, b.v, _CMP_GT_OQ);
}
inline __m256d cmp_ge(AvxPack a, AvxPack b) {
  return _mm256_cmp_pd(a.v, b.v, _CMP_GE_OQ);
}
inline __m256d cmp_eq(AvxPack a, AvxPack b) {
  return _mm256_cmp_pd(a.v, b.v, _CMP_EQ_OQ);
}
inline __m256d mask_and(__m256d a, __m256d b) { return _mm256_and_pd(a, b); }
inline __m256d mask_or(__m256d a, __m256d b) { return _mm256_or_pd(a, b); }
inline AvxPack select(__m256d m, AvxPack a, AvxPack b) {
  return {_mm256_blendv_pd(b.v, a.v, m)};
}

inline AvxPack split_mexp(AvxPack x, AvxPack& e) {
  const __m256i bits = _mm256_castpd_si256(x.v);
  const __m256i biased =
      _mm256_and_si256(_mm256_srli_epi64(bits, 52), _mm256_set1_epi64x(0x7ff));
  // Exact small-integer conversion via the 2^52 magic constant.
  const __m256d magic = _mm256_set1_pd(0x1.0p52);
  const __m256d eb = _mm256_sub_pd(
      _mm256_castsi256_pd(_mm256_or_si256(biased, _mm256_castpd_si256(magic))),
      magic);
  e.v = _mm256_sub_pd(eb, _mm256_set1_pd(1022.0));
  const __m256i mant =
      _mm256_or_si256(_mm256_and_si256(bits, _mm256_set1_epi64x(0x000fffffffffffffLL)),
                      _mm256_set1_epi64x(0x3fe0000000000000LL));
  return {_mm256_castsi256_pd(mant)};
}

inline void store_acc(const AvxPack* acc, double out[4]) {
  _mm256_storeu_pd(out, acc[0].v);
}

}  // namespace specshare::detail

namespace specshare::kernels {

ErgodicSums ergodic_sums_avx2(const detail::BatchParams& bp, const double* g0,
                              const double* g1, std::size_t n) {
  return detail::ergodic_batch<detail::AvxPack>(bp, g0, g1, n);
}

OutageSums outage_sums_avx2(const detail::BatchParams& bp, const double* g0,
                            const double* g1, std::size_t n) {
  return detail::outage_batch<detail::AvxPack>(bp, g0, g1, n);
}

}  // namespace specshare::kernels

#endif  // __AVX2__ && __FMA__
