#pragma once

// Shared batch-accumulation driver. Both backends run this exact template:
// the main loop walks 4 logical lanes (one vector for AVX2, a 4-stripe
// round-robin for scalar), the tail reuses the scalar per-state path into
// the matching lane, and lanes always combine as (l0+l1)+(l2+l3). That
// fixed shape is what makes scalar and AVX2 results bit-identical and runs
// deterministic.

#include <cstddef>

#include "specshare/detail/vec.hpp"
#include "specshare/kernels.hpp"

namespace specshare::detail {

struct BatchParams {
  Variant variant = Variant::f1;
  double lam = 0.0, mu = 0.0;
  double p_pk = 0.0, q_pk = 0.0, n0 = 1.0;
  double c = 0.0;  // n0 * (2^r0 - 1), outage kernels only

  static BatchParams from(const PolicyContext& ctx) {
    BatchParams bp;
    bp.variant = ctx.constraints.variant;
    bp.lam = ctx.duals.lambda;
    bp.mu = ctx.duals.mu;
    bp.p_pk = ctx.constraints.p_pk;
    bp.q_pk = ctx.constraints.q_pk;
    bp.n0 = ctx.constraints.n0;
    if (ctx.objective == ObjectiveKind::outage) bp.c = inversion_level(bp.n0, ctx.r0);
    return bp;
  }
};

inline void store_acc(const ScalarPack* acc, double out[4]) {
  for (int j = 0; j < 4; ++j) out[j] = acc[j].v;
}

template <class V, class PowerFn>
kernels::ErgodicSums ergodic_loop(const double* g0, const double* g1, std::size_t n,
                                  double n0, PowerFn&& power) {
  constexpr int kWidth = V::width;
  constexpr int kAccs = 4 / kWidth;
  V ap[kAccs], ag[kAccs], ar[kAccs], ap2[kAccs], ag2[kAccs], ar2[kAccs];
  for (int j = 0; j < kAccs; ++j) {
    ap[j] = V::set1(0.0);
    ag[j] = V::set1(0.0);
    ar[j] = V::set1(0.0);
    ap2[j] = V::set1(0.0);
    ag2[j] = V::set1(0.0);
    ar2[j] = V::set1(0.0);
  }
  const V n0v = V::set1(n0);
  const std::size_t n4 = n & ~std::size_t{3};
  for (std::size_t i = 0; i < n4; i += 4) {
    if constexpr (kWidth == 4) {
      const V a = V::load(g0 + i);
      const V b = V::load(g1 + i);
      const V p = power(a, b);
      const V gp = a * p;
      const V r = rate_bits(b, p, n0v);
      ap[0] = ap[0] + p;
      ag[0] = ag[0] + gp;
      ar[0] = ar[0] + r;
      ap2[0] = vfma(p, p, ap2[0]);
      ag2[0] = vfma(gp, gp, ag2[0]);
      ar2[0] = vfma(r, r, ar2[0]);
    } else {
      for (int j = 0; j < 4; ++j) {
        const V a = V::load(g0 + i + j);
        const V b = V::load(g1 + i + j);
        const V p = power(a, b);
        const V gp = a * p;
        const V r = rate_bits(b, p, n0v);
        ap[j] = ap[j] + p;
        ag[j] = ag[j] + gp;
        ar[j] = ar[j] + r;
        ap2[j] = vfma(p, p, ap2[j]);
        ag2[j] = vfma(gp, gp, ag2[j]);
        ar2[j] = vfma(r, r, ar2[j]);
      }
    }
  }
  double lp[4], lg[4], lr[4], lp2[4], lg2[4], lr2[4];
  store_acc(ap, lp);
  store_acc(ag, lg);
  store_acc(ar, lr);
  store_acc(ap2, lp2);
  store_acc(ag2, lg2);
  store_acc(ar2, lr2);
  for (std::size_t i = n4; i < n; ++i) {
    const ScalarPack a{g0[i]};
    const ScalarPack b{g1[i]};
    const ScalarPack p = power(a, b);
    const ScalarPack gp = a * p;
    const ScalarPack r = rate_bits(b, p, ScalarPack{n0});
    const int j = static_cast<int>(i - n4);
    lp[j] += p.v;
    lg[j] += gp.v;
    lr[j] += r.v;
    lp2[j] = std::fma(p.v, p.v, lp2[j]);
    lg2[j] = std::fma(gp.v, gp.v, lg2[j]);
    lr2[j] = std::fma(r.v, r.v, lr2[j]);
  }
  kernels::ErgodicSums s;
  s.p = (lp[0] + lp[1]) + (lp[2] + lp[3]);
  s.g0p = (lg[0] + lg[1]) + (lg[2] + lg[3]);
  s.rate = (lr[0] + lr[1]) + (lr[2] + lr[3]);
  s.p_sq = (lp2[0] + lp2[1]) + (lp2[2] + lp2[3]);
  s.g0p_sq = (lg2[0] + lg2[1]) + (lg2[2] + lg2[3]);
  s.rate_sq = (lr2[0] + lr2[1]) + (lr2[2] + lr2[3]);
  s.n = n;
  return s;
}

template <class V, class PowerFn>
kernels::OutageSums outage_loop(const double* g0, const double* g1, std::size_t n,
                                PowerFn&& power) {
  constexpr int kWidth = V::width;
  constexpr int kAccs = 4 / kWidth;
  V ap[kAccs], ag[kAccs], ax[kAccs], ap2[kAccs], ag2[kAccs];
  for (int j = 0; j < kAccs; ++j) {
    ap[j] = V::set1(0.0);
    ag[j] = V::set1(0.0);
    ax[j] = V::set1(0.0);
    ap2[j] = V::set1(0.0);
    ag2[j] = V::set1(0.0);
  }
  const std::size_t n4 = n & ~std::size_t{3};
  for (std::size_t i = 0; i < n4; i += 4) {
    if constexpr (kWidth == 4) {
      const V a = V::load(g0 + i);
      const V b = V::load(g1 + i);
      const V p = power(a, b);
      const V gp = a * p;
      const V chi = select(cmp_eq(p, V::set1(0.0)), V::set1(1.0), V::set1(0.0));
      ap[0] = ap[0] + p;
      ag[0] = ag[0] + gp;
      ax[0] = ax[0] + chi;
      ap2[0] = vfma(p, p, ap2[0]);
      ag2[0] = vfma(gp, gp, ag2[0]);
    } else {
      for (int j = 0; j < 4; ++j) {
        const V a = V::load(g0 + i + j);
        const V b = V::load(g1 + i + j);
        const V p = power(a, b);
        const V gp = a * p;
        const V chi = select(cmp_eq(p, V::set1(0.0)), V::set1(1.0), V::set1(0.0));
        ap[j] = ap[j] + p;
        ag[j] = ag[j] + gp;
        ax[j] = ax[j] + chi;
        ap2[j] = vfma(p, p, ap2[j]);
        ag2[j] = vfma(gp, gp, ag2[j]);
      }
    }
  }
  double lp[4], lg[4], lx[4], lp2[4], lg2[4];
  store_acc(ap, lp);
  store_acc(ag, lg);
  store_acc(ax, lx);
  store_acc(ap2, lp2);
  store_acc(ag2, lg2);
  for (std::size_t i = n4; i < n; ++i) {
    const ScalarPack a{g0[i]};
    const ScalarPack b{g1[i]};
    const ScalarPack p = power(a, b);
    const ScalarPack gp = a * p;
    const int j = static_cast<int>(i - n4);
    lp[j] += p.v;
    lg[j] += gp.v;
    lx[j] += (p.v == 0.0) ? 1.0 : 0.0;
    lp2[j] = std::fma(p.v, p.v, lp2[j]);
    lg2[j] = std::fma(gp.v, gp.v, lg2[j]);
  }
  kernels::OutageSums s;
  s.p = (lp[0] + lp[1]) + (lp[2] + lp[3]);
  s.g0p = (lg[0] + lg[1]) + (lg[2] + lg[3]);
  s.outage = (lx[0] + lx[1]) + (lx[2] + lx[3]);
  s.p_sq = (lp2[0] + lp2[1]) + (lp2[2] + lp2[3]);
  s.g0p_sq = (lg2[0] + lg2[1]) + (lg2[2] + lg2[3]);
  s.n = n;
  return s;
}

template <class V>
kernels::ErgodicSums ergodic_batch(const BatchParams& bp, const double* g0,
                                   const double* g1, std::size_t n) {
  switch (bp.variant) {
    case Variant::f1:
      return ergodic_loop<V>(g0, g1, n, bp.n0, [&]<class P>(P a, P) {
        return ergodic_power_f1(a, P::set1(bp.p_pk), P::set1(bp.q_pk));
      });
    case Variant::f2:
      return ergodic_loop<V>(g0, g1, n, bp.n0, [&]<class P>(P a, P b) {
        return ergodic_power_f2(a, b, P::set1(bp.lam), P::set1(bp.p_pk),
                                P::set1(bp.n0), P::set1(kLog2e));
      });
    case Variant::f3:
      return ergodic_loop<V>(g0, g1, n, bp.n0, [&]<class P>(P a, P b) {
        return ergodic_power_f3(a, b, P::set1(bp.lam), P::set1(bp.q_pk),
                                P::set1(bp.n0), P::set1(kLog2e));
      });
    case Variant::f4:
      return ergodic_loop<V>(g0, g1, n, bp.n0, [&]<class P>(P a, P b) {
        return ergodic_power_f4(a, b, P::set1(bp.lam), P::set1(bp.mu),
                                P::set1(bp.n0), P::set1(kLog2e));
      });
  }
  return {};
}

template <class V>
kernels::OutageSums outage_batch(const BatchParams& bp, const double* g0,
                                 const double* g1, std::size_t n) {
  switch (bp.variant) {
    case Variant::f1:
      return outage_loop<V>(g0, g1, n, [&]<class P>(P a, P b) {
        return outage_power_f1(a, b, P::set1(bp.p_pk), P::set1(bp.q_pk),
                               P::set1(bp.c));
      });
    case Variant::f2:
      return outage_loop<V>(g0, g1, n, [&]<class P>(P a, P b) {
        return outage_power_f2(a, b, P::set1(bp.lam), P::set1(bp.p_pk),
                               P::set1(bp.c));
      });
    case Variant::f3:
      return outage_loop<V>(g0, g1, n, [&]<class P>(P a, P b) {
        return outage_power_f3(a, b, P::set1(bp.lam), P::set1(bp.q_pk),
                               P::set1(bp.c));
      });
    case Variant::f4:
      return outage_loop<V>(g0, g1, n, [&]<class P>(P a, P b) {
        return outage_power_f4(a, b, P::set1(bp.lam), P::set1(bp.mu),
                               P::set1(bp.c));
      });
  }
  return {};
}

}  // namespace specshare::detail
