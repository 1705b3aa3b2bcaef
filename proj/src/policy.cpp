#include "specshare/policy.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "specshare/detail/vec.hpp"

namespace specshare {

const char* to_string(Variant v) {
  switch (v) {
    case Variant::f1: return "F1";
    case Variant::f2: return "F2";
    case Variant::f3: return "F3";
    case Variant::f4: return "F4";
  }
  return "?";
}

void ConstraintSet::validate() const {
  if (!(n0 > 0.0)) throw std::invalid_argument("ConstraintSet: n0 must be positive");
  auto check_owned = [](double v, const char* name) {
    if (!(v > 0.0))
      throw std::invalid_argument(std::string("ConstraintSet: ") + name +
                                  " must be positive");
  };
  auto check_unowned = [](double v, const char* name) {
    if (v != kInfinity)
      throw std::invalid_argument(std::string("ConstraintSet: ") + name +
                                  " does not belong to this variant");
  };
  owns_p_pk() ? check_owned(p_pk, "p_pk") : check_unowned(p_pk, "p_pk");
  owns_p_av() ? check_owned(p_av, "p_av") : check_unowned(p_av, "p_av");
  owns_q_pk() ? check_owned(q_pk, "q_pk") : check_unowned(q_pk, "q_pk");
  owns_q_av() ? check_owned(q_av, "q_av") : check_unowned(q_av, "q_av");
  const double a = owns_p_pk() ? p_pk : p_av;
  const double b = owns_q_pk() ? q_pk : q_av;
  if (a == kInfinity && b == kInfinity)
    throw std::invalid_argument("ConstraintSet: at least one limit must be finite");
}

void PolicyContext::validate() const {
  constraints.validate();
  if (!(duals.lambda >= 0.0) || !(duals.mu >= 0.0))
    throw std::invalid_argument("PolicyContext: dual variables must be nonnegative");
  if (objective == ObjectiveKind::outage && !(r0 > 0.0))
    throw std::invalid_argument("PolicyContext: outage objective needs r0 > 0");
}

double inversion_level(double n0, double r0) { return n0 * (std::exp2(r0) - 1.0); }

double ergodic_power(const PolicyContext& ctx, const ChannelState& state) {
  using P = detail::ScalarPack;
  const auto& cs = ctx.constraints;
  const P g0{state.g0}, g1{state.g1};
  const P lam{ctx.duals.lambda}, mu{ctx.duals.mu};
  const P n0{cs.n0}, k{kLog2e};
  switch (cs.variant) {
    case Variant::f1:
      return detail::ergodic_power_f1(g0, P{cs.p_pk}, P{cs.q_pk}).v;
    case Variant::f2:
      return detail::ergodic_power_f2(g0, g1, lam, P{cs.p_pk}, n0, k).v;
    case Variant::f3:
      return detail::ergodic_power_f3(g0, g1, lam, P{cs.q_pk}, n0, k).v;
    case Variant::f4:
      return detail::ergodic_power_f4(g0, g1, lam, mu, n0, k).v;
  }
  return 0.0;
}

double outage_power(const PolicyContext& ctx, const ChannelState& state) {
  using P = detail::ScalarPack;
  const auto& cs = ctx.constraints;
  if (!(ctx.r0 > 0.0))
    throw std::invalid_argument("outage_power: r0 must be positive");
  const P g0{state.g0}, g1{state.g1};
  const P lam{ctx.duals.lambda}, mu{ctx.duals.mu};
  const P c{inversion_level(cs.n0, ctx.r0)};
  switch (cs.variant) {
    case Variant::f1:
      return detail::outage_power_f1(g0, g1, P{cs.p_pk}, P{cs.q_pk}, c).v;
    case Variant::f2:
      return detail::outage_power_f2(g0, g1, lam, P{cs.p_pk}, c).v;
    case Variant::f3:
      return detail::outage_power_f3(g0, g1, lam, P{cs.q_pk}, c).v;
    case Variant::f4:
      return detail::outage_power_f4(g0, g1, lam, mu, c).v;
  }
  return 0.0;
}

}  // namespace specshare
