#pragma once

#include <limits>

#include "specshare/fading.hpp"

namespace specshare {

// K = log2(e); the water-filling stationarity conditions carry it because
// rates are in bits.
inline constexpr double kLog2e = 1.4426950408889634074;

inline constexpr double kInfinity = std::numeric_limits<double>::infinity();

// The four peak/average transmit x interference constraint combinations.
enum class Variant { f1, f2, f3, f4 };

const char* to_string(Variant v);

// Power limits are linear watts (normalized by the same reference as n0);
// +inf on a limit owned by the variant means "constraint absent" for
// single-constraint studies. Limits not owned by the variant must stay
// +inf.
//
//   f1: peak transmit (p_pk)  + peak interference (q_pk)
//   f2: peak transmit (p_pk)  + average interference (q_av)
//   f3: average transmit (p_av) + peak interference (q_pk)
//   f4: average transmit (p_av) + average interference (q_av)
struct ConstraintSet {
  Variant variant = Variant::f1;
  double p_pk = kInfinity;
  double p_av = kInfinity;
  double q_pk = kInfinity;
  double q_av = kInfinity;
  double n0 = 1.0;

  bool owns_p_pk() const { return variant == Variant::f1 || variant == Variant::f2; }
  bool owns_p_av() const { return variant == Variant::f3 || variant == Variant::f4; }
  bool owns_q_pk() const { return variant == Variant::f1 || variant == Variant::f3; }
  bool owns_q_av() const { return variant == Variant::f2 || variant == Variant::f4; }

  void validate() const;  // throws std::invalid_argument
};

// Nonnegative multipliers parameterizing a policy. lambda prices the
// average constraint that is active in f2/f3, or E[P] in f4; mu prices
// E[g0 P] in f4 and stays zero elsewhere.
struct DualVariables {
  double lambda = 0.0;
  double mu = 0.0;
};

enum class ObjectiveKind { ergodic, outage };

struct PolicyContext {
  ConstraintSet constraints;
  DualVariables duals;
  ObjectiveKind objective = ObjectiveKind::ergodic;
  double r0 = 0.0;  // outage target rate, bits per complex dimension

  void validate() const;
};

// Optimal instantaneous transmit power for the ergodic-rate objective.
// Exactly respects the peak constraints of the variant; g1 = 0 yields 0.
double ergodic_power(const PolicyContext& ctx, const ChannelState& state);

// Optimal instantaneous power for the outage objective at rate ctx.r0:
// exactly n0*(2^r0 - 1)/g1 when the variant's inversion condition holds,
// exactly 0 otherwise.
double outage_power(const PolicyContext& ctx, const ChannelState& state);

// n0*(2^r0 - 1): the received-power level that achieves rate r0.
double inversion_level(double n0, double r0);

}  // namespace specshare
