#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <vector>

namespace specshare {

enum class FadingKind { constant, rayleigh, nakagami, lognormal };

const char* to_string(FadingKind kind);

// Distribution of one channel power gain.
//
// constant:  g = mean_gain with probability one (AWGN-style link).
// rayleigh:  g ~ Exponential with mean mean_gain.
// nakagami:  g ~ Gamma(shape m, rate m/mean_gain), m >= 1.
// lognormal: g = exp(X), X ~ Normal(0, sigma2). Its mean is
//            exp(sigma2/2), not 1; the factory records that value in
//            mean_gain and the moment formulas assume this exact form.
struct FadingModel {
  FadingKind kind = FadingKind::constant;
  double mean_gain = 1.0;
  double m = 1.0;       // Nakagami shape, meaningful iff kind == nakagami
  double sigma2 = 1.0;  // log-domain variance, meaningful iff kind == lognormal

  static FadingModel constant(double mean = 1.0);
  static FadingModel rayleigh(double mean = 1.0);
  static FadingModel nakagami(double shape, double mean = 1.0);
  static FadingModel lognormal(double sigma2);

  // True iff the model is in the canonical normalization the ratio/moment
  // closed forms assume (unit mean; exp(sigma2/2) for lognormal).
  bool canonical() const;

  void validate() const;  // throws std::invalid_argument
};

struct ChannelState {
  double g0 = 0.0;  // SU-Tx -> PU-Rx power gain
  double g1 = 0.0;  // SU-Tx -> SU-Rx power gain
};

// Identifies a reproducible random sequence. Equal (seed, stream_id)
// always reproduces the identical sample sequence bit for bit.
struct RngStream {
  std::uint64_t seed = 1;
  std::uint64_t stream_id = 0;
};

// Structure-of-arrays batch of i.i.d. channel states.
struct SampleBatch {
  std::vector<double> g0;
  std::vector<double> g1;
  std::size_t size() const { return g0.size(); }
  ChannelState state(std::size_t i) const { return {g0[i], g1[i]}; }
};

// Draws one gain sequence; g0 and g1 of a pair use disjoint substreams so
// the coordinates are independent regardless of per-model draw counts.
class GainSampler {
 public:
  GainSampler(const FadingModel& model, const RngStream& rng, std::uint64_t substream);
  double next();

 private:
  FadingModel model_;
  std::mt19937_64 engine_;
  double uniform01();
  double normal01();
  double gamma_shape_ge1(double shape);
};

// n i.i.d. draws of (g0, g1), independent coordinates.
SampleBatch sample_pair(const FadingModel& m0, const FadingModel& m1,
                        const RngStream& rng, std::size_t n);

// Density of g0/g1 at x >= 0 for independent same-kind canonical models.
// Throws UnsupportedCombinationError for mixed kinds, mismatched shape
// parameters, or the constant kind.
double ratio_pdf(const FadingModel& m0, const FadingModel& m1, double x);

// E[1/g1] for a canonical model; +infinity is returned as an explicit
// sentinel (never via overflow). Throws UndefinedMomentError for
// Nakagami m = 1 (use the rayleigh kind for that distribution).
double moment_inverse_g1(const FadingModel& m1);

// E[g0/g1] for independent same-kind canonical models, +infinity sentinel
// as above.
double moment_ratio(const FadingModel& m0, const FadingModel& m1);

}  // namespace specshare
