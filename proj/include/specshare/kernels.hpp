#pragma once

#include <cstdint>
#include <span>

#include "specshare/policy.hpp"

namespace specshare::kernels {

// Batch backends. The scalar kernel is the reference; the AVX2 kernel is
// bit-identical to it by construction (shared per-lane algorithm, fixed
// 4-lane accumulation order) and is selected at runtime on capable CPUs.
enum class Backend { scalar, avx2 };

const char* to_string(Backend b);
bool available(Backend b);
Backend preferred();

// Raw sums over a batch; divide by n for means. Squared sums feed the
// standard-error estimates.
struct ErgodicSums {
  double p = 0.0, g0p = 0.0, rate = 0.0;
  double p_sq = 0.0, g0p_sq = 0.0, rate_sq = 0.0;
  std::uint64_t n = 0;
};

struct OutageSums {
  double p = 0.0, g0p = 0.0;
  double p_sq = 0.0, g0p_sq = 0.0;
  double outage = 0.0;  // number of states with zero power (chi = 1)
  std::uint64_t n = 0;
};

// Sums of P, g0*P and log2(1 + g1*P/n0) under the ergodic policy of
// ctx (objective must be ergodic).
ErgodicSums ergodic_sums(const PolicyContext& ctx, std::span<const double> g0,
                         std::span<const double> g1, Backend backend);

// Sums of P and g0*P plus the outage count under the 2D-TCI policy of
// ctx (objective must be outage).
OutageSums outage_sums(const PolicyContext& ctx, std::span<const double> g0,
                       std::span<const double> g1, Backend backend);

// The kernels' own log2 (scalar lane), full special-value handling;
// exposed so tests can measure it against the library log2.
double log2_portable(double x);

}  // namespace specshare::kernels
