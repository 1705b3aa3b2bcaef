#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "specshare/fading.hpp"
#include "specshare/kernels.hpp"
#include "specshare/policy.hpp"

namespace specshare {

enum class Method { monte_carlo, quadrature };

struct EstimatorConfig {
  Method method = Method::monte_carlo;
  std::uint64_t samples = 200'000;  // Monte Carlo draws, >= 1000
  RngStream rng{1, 0};
  int nodes_per_axis = 96;  // tensor-product quadrature, >= 16
  bool report_se = true;
  std::optional<kernels::Backend> backend;  // default: runtime-preferred

  void validate() const;
};

struct Estimate {
  double value = 0.0;
  double se = 0.0;
};

struct Expectations {
  Estimate e_p;     // E[P]
  Estimate e_g0p;   // E[g0 P]
  Estimate e_rate;  // E[log2(1 + g1 P / n0)]
  Estimate outage;  // E[chi], chi = 1{rate < r0}; meaningful for outage objective
  std::uint64_t n = 0;
};

// Holds the Monte Carlo batch (common random numbers) or the quadrature
// grid so one dual solve can re-evaluate many candidate multipliers on the
// same deterministic sample set.
class ExpectationEngine {
 public:
  ExpectationEngine(const FadingModel& m0, const FadingModel& m1,
                    const EstimatorConfig& cfg);

  Expectations evaluate(const PolicyContext& ctx) const;

  bool is_quadrature() const { return quadrature_; }
  // Monte Carlo states (empty for quadrature engines).
  const SampleBatch& batch() const { return batch_; }
  std::uint64_t size() const;

 private:
  EstimatorConfig cfg_;
  kernels::Backend backend_ = kernels::Backend::scalar;
  bool quadrature_ = false;
  SampleBatch batch_;
  std::vector<double> g0_nodes_, g0_weights_, g1_nodes_, g1_weights_;

  Expectations evaluate_quadrature(const PolicyContext& ctx) const;
};

// One-shot expectation under the given policy context.
Expectations expect(const PolicyContext& ctx, const FadingModel& m0,
                    const FadingModel& m1, const EstimatorConfig& cfg);

struct SolverOptions {
  double residual_tol = 1e-3;      // relative, reported against active targets
  double bracket_rel_tol = 1e-10;  // dual-variable bracket width
  int max_doublings = 62;
  int max_iterations = 200;
};

struct DualSolution {
  DualVariables duals;
  double achieved_ep = 0.0;
  double achieved_egp = 0.0;
  // Relative residuals of the active average constraints (0 when slack or
  // absent); residual is the larger of the two.
  double residual_p = 0.0;
  double residual_q = 0.0;
  double residual = 0.0;
  // True when the corresponding average constraint is met with strict
  // inequality (its multiplier is then zero) or is absent entirely.
  bool transmit_slack = true;
  bool interference_slack = true;
  // Final search bracket of the outermost solved multiplier, for
  // diagnostics; equal endpoints mean no search was needed.
  double bracket_lo = 0.0;
  double bracket_hi = 0.0;
  std::uint64_t evaluations = 0;
};

// Pins the dual variables so every active average constraint is met with
// equality on the engine's sample set (or proves it slack at zero).
// Throws InfeasibleTargetError for non-positive targets and
// NonConvergenceError when bracketing fails.
DualSolution solve_dual(const ConstraintSet& cs, ObjectiveKind objective, double r0,
                        const ExpectationEngine& engine, const SolverOptions& opts = {});

DualSolution solve_dual(const ConstraintSet& cs, ObjectiveKind objective, double r0,
                        const FadingModel& m0, const FadingModel& m1,
                        const EstimatorConfig& cfg, const SolverOptions& opts = {});

struct KktReport {
  bool pass = true;
  std::uint64_t checked = 0;
  std::uint64_t violations = 0;
  double max_stationarity_residual = 0.0;
  double slackness_residual = 0.0;  // relative, worst constraint
  std::vector<ChannelState> examples;  // up to 10 violating states
};

// Replays the optimality conditions of the solved policy on the given
// states: per-state stationarity/sign conditions at tolerance `tol`, and
// complementary slackness of the average constraints at `slack_tol`
// (relative). The slackness check is meaningful on the same sample set the
// solution was computed from.
KktReport kkt_verify(const DualSolution& solution, const PolicyContext& ctx,
                     const SampleBatch& states, double tol = 1e-6,
                     double slack_tol = 2e-3);

}  // namespace specshare
