#pragma once

// Lane-width abstraction shared by the scalar reference kernels and the
// AVX2 kernels. Every operation here maps to exactly one IEEE-754
// correctly-rounded operation per lane (add/sub/mul/div/fma, min/max with
// x86 blend semantics, ordered-quiet compares), so instantiating the same
// algorithm at width 1 and width 4 produces bit-identical lanes. Keep
// translation units that instantiate these templates on -ffp-contract=off
// so the compiler cannot introduce fusions the other backend lacks.

#include <bit>
#include <cmath>
#include <cstdint>
#include <limits>

namespace specshare::detail {

struct ScalarPack {
  double v;
  using Mask = bool;
  static constexpr int width = 1;
  static ScalarPack set1(double x) { return {x}; }
  static ScalarPack load(const double* p) { return {*p}; }
};

inline ScalarPack operator+(ScalarPack a, ScalarPack b) { return {a.v + b.v}; }
inline ScalarPack operator-(ScalarPack a, ScalarPack b) { return {a.v - b.v}; }
inline ScalarPack operator*(ScalarPack a, ScalarPack b) { return {a.v * b.v}; }
inline ScalarPack operator/(ScalarPack a, ScalarPack b) { return {a.v / b.v}; }
// Same lane rule as _mm256_min_pd/_mm256_max_pd: second operand wins ties
// and unordered comparisons.
inline ScalarPack vmin(ScalarPack a, ScalarPack b) { return {a.v < b.v ? a.v : b.v}; }
inline ScalarPack vmax(ScalarPack a, ScalarPack b) { return {a.v > b.v ? a.v : b.v}; }
inline ScalarPack vfma(ScalarPack a, ScalarPack b, ScalarPack c) {
  return {std::fma(a.v, b.v, c.v)};
}
inline bool cmp_lt(ScalarPack a, ScalarPack b) { return a.v < b.v; }
inline bool cmp_le(ScalarPack a, ScalarPack b) { return a.v <= b.v; }
inline bool cmp_gt(ScalarPack a, ScalarPack b) { return a.v > b.v; }
inline bool cmp_ge(ScalarPack a, ScalarPack b) { return a.v >= b.v; }
inline bool cmp_eq(ScalarPack a, ScalarPack b) { return a.v == b.v; }
inline bool mask_and(bool a, bool b) { return a && b; }
inline bool mask_or(bool a, bool b) { return a || b; }
inline ScalarPack select(bool m, ScalarPack a, ScalarPack b) { return m ? a : b; }

// x = m * 2^e with m in [0.5, 1); valid for normal positive x.
inline ScalarPack split_mexp(ScalarPack x, ScalarPack& e) {
  const std::uint64_t bits = std::bit_cast<std::uint64_t>(x.v);
  const std::int64_t biased = static_cast<std::int64_t>((bits >> 52) & 0x7ff);
  e.v = static_cast<double>(biased - 1022);
  const double m = std::bit_cast<double>((bits & 0x000fffffffffffffULL) |
                                         0x3fe0000000000000ULL);
  return {m};
}

// ---------------------------------------------------------------------------
// log2 for normal positive finite x (rational minimax on [sqrt(1/2), sqrt(2)),
// cephes-style coefficients; ~1-2 ulp). Callers mask out 0/inf/NaN lanes.
// ---------------------------------------------------------------------------

inline constexpr double kLog2Ea = 4.4269504088896340735992e-1;  // log2(e) - 1
inline constexpr double kSqrtHalf = 0.70710678118654752440;

template <class V>
inline V log2_core(V x) {
  const V one = V::set1(1.0);
  V e;
  V m = split_mexp(x, e);
  const auto low = cmp_lt(m, V::set1(kSqrtHalf));
  const V xx = select(low, m + m - one, m - one);
  const V ee = select(low, e - one, e);
  const V z = xx * xx;

  V num = V::set1(1.01875663804580931796e-4);
  num = vfma(num, xx, V::set1(4.97494994976747001425e-1));
  num = vfma(num, xx, V::set1(4.70579119878881725854e0));
  num = vfma(num, xx, V::set1(1.44989225341610930846e1));
  num = vfma(num, xx, V::set1(1.79368678507819816313e1));
  num = vfma(num, xx, V::set1(7.70838733755885391666e0));

  V den = xx + V::set1(1.12873587189167450590e1);
  den = vfma(den, xx, V::set1(4.52279145837532221105e1));
  den = vfma(den, xx, V::set1(8.29875266912776603211e1));
  den = vfma(den, xx, V::set1(7.11544750618563894466e1));
  den = vfma(den, xx, V::set1(2.31251620126765340583e1));

  V y = xx * (z * num / den);
  y = y - z * V::set1(0.5);

  V r = y * V::set1(kLog2Ea);
  r = vfma(xx, V::set1(kLog2Ea), r);
  r = r + y;
  r = r + xx;
  r = r + ee;
  return r;
}

// log2(1 + g1 * p / n0): the rate integrand. Arguments are >= 1 by
// construction; +inf lanes (uncapped-power edge states) pass through.
template <class V>
inline V rate_bits(V g1, V p, V n0) {
  const V one = V::set1(1.0);
  const V arg = one + g1 * p / n0;
  const V inf = V::set1(std::numeric_limits<double>::infinity());
  return select(cmp_eq(arg, inf), inf, log2_core(arg));
}

// ---------------------------------------------------------------------------
// Per-state optimal transmit power, ergodic objective.
// All conditions are written so that absent limits (+inf) and dead states
// (g1 = 0) resolve through IEEE arithmetic without branches.
// ---------------------------------------------------------------------------

template <class V>
inline V ergodic_power_f1(V g0, V p_pk, V q_pk) {
  return vmin(p_pk, q_pk / g0);
}

template <class V>
inline V ergodic_power_f2(V g0, V g1, V lam, V p_pk, V n0, V k) {
  const V zero = V::set1(0.0);
  const V inv = n0 / g1;
  const V hi = k * g1 / (lam * n0);          // at or above: stay silent
  const V lo = k / (lam * (p_pk + inv));     // at or below: full peak power
  const V mid = k / (lam * g0) - inv;
  const V p = select(cmp_ge(g0, hi), zero, select(cmp_le(g0, lo), p_pk, mid));
  return select(cmp_le(g1, zero), zero, p);
}

template <class V>
inline V ergodic_power_f3(V g0, V g1, V lam, V q_pk, V n0, V k) {
  const V zero = V::set1(0.0);
  const V wf = k / lam - n0 / g1;
  const V p = select(cmp_lt(g0 * wf, q_pk), wf, q_pk / g0);
  return select(cmp_le(g1 * k, lam * n0), zero, p);
}

template <class V>
inline V ergodic_power_f4(V g0, V g1, V lam, V mu, V n0, V k) {
  const V zero = V::set1(0.0);
  const V p = vmax(zero, k / vfma(mu, g0, lam) - n0 / g1);
  return select(cmp_le(g1, zero), zero, p);
}

// ---------------------------------------------------------------------------
// Per-state optimal transmit power, outage objective (2D truncated channel
// inversion). c = n0 * (2^r0 - 1); the power is exactly c/g1 or exactly 0.
// Strict/weak comparisons follow the respective optimality conditions.
// ---------------------------------------------------------------------------

template <class V>
inline V outage_power_f1(V g0, V g1, V p_pk, V q_pk, V c) {
  const V zero = V::set1(0.0);
  const V pinv = c / g1;
  const auto ok = mask_and(cmp_le(pinv, p_pk), cmp_le(g0 * pinv, q_pk));
  return select(cmp_le(g1, zero), zero, select(ok, pinv, zero));
}

template <class V>
inline V outage_power_f2(V g0, V g1, V lam, V p_pk, V c) {
  const V zero = V::set1(0.0);
  const V one = V::set1(1.0);
  const V pinv = c / g1;
  const auto ok = mask_and(cmp_le(pinv, p_pk), cmp_lt(lam * g0 * pinv, one));
  return select(cmp_le(g1, zero), zero, select(ok, pinv, zero));
}

template <class V>
inline V outage_power_f3(V g0, V g1, V lam, V q_pk, V c) {
  const V zero = V::set1(0.0);
  const V one = V::set1(1.0);
  const V pinv = c / g1;
  const auto ok = mask_and(cmp_lt(lam * pinv, one), cmp_le(g0 * pinv, q_pk));
  return select(cmp_le(g1, zero), zero, select(ok, pinv, zero));
}

template <class V>
inline V outage_power_f4(V g0, V g1, V lam, V mu, V c) {
  const V zero = V::set1(0.0);
  const V one = V::set1(1.0);
  const V pinv = c / g1;
  const auto ok = cmp_lt(vfma(mu, g0, lam) * pinv, one);
  return select(cmp_le(g1, zero), zero, select(ok, pinv, zero));
}

}  // namespace specshare::detail
