#include "specshare/fading.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <string>

#include "specshare/errors.hpp"

namespace specshare {

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();

std::uint64_t splitmix64(std::uint64_t z) {
  z += 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

std::uint64_t derive_seed(const RngStream& rng, std::uint64_t substream) {
  std::uint64_t s = splitmix64(rng.seed);
  s = splitmix64(s ^ splitmix64(rng.stream_id + 0x632be59bd9b4e019ULL));
  s = splitmix64(s ^ splitmix64(substream + 0x9e6c63d0876a9a47ULL));
  return s;
}
}  // namespace

const char* to_string(FadingKind kind) {
  switch (kind) {
    case FadingKind::constant: return "constant";
    case FadingKind::rayleigh: return "rayleigh";
    case FadingKind::nakagami: return "nakagami";
    case FadingKind::lognormal: return "lognormal";
  }
  return "?";
}

FadingModel FadingModel::constant(double mean) {
  FadingModel f;
  f.kind = FadingKind::constant;
  f.mean_gain = mean;
  f.validate();
  return f;
}

FadingModel FadingModel::rayleigh(double mean) {
  FadingModel f;
  f.kind = FadingKind::rayleigh;
  f.mean_gain = mean;
  f.validate();
  return f;
}

FadingModel FadingModel::nakagami(double shape, double mean) {
  FadingModel f;
  f.kind = FadingKind::nakagami;
  f.m = shape;
  f.mean_gain = mean;
  f.validate();
  return f;
}

FadingModel FadingModel::lognormal(double sigma2) {
  FadingModel f;
  f.kind = FadingKind::lognormal;
  f.sigma2 = sigma2;
  f.mean_gain = std::exp(sigma2 / 2.0);
  f.validate();
  return f;
}

bool FadingModel::canonical() const {
  const double want = kind == FadingKind::lognormal ? std::exp(sigma2 / 2.0) : 1.0;
  return std::abs(mean_gain - want) <= 1e-12 * want;
}

void FadingModel::validate() const {
  if (!(mean_gain > 0.0))
    throw std::invalid_argument("FadingModel: mean_gain must be positive");
  if (kind == FadingKind::nakagami && !(m >= 1.0))
    throw std::invalid_argument("FadingModel: Nakagami shape m must be >= 1");
  if (kind == FadingKind::lognormal && !(sigma2 > 0.0))
    throw std::invalid_argument("FadingModel: lognormal sigma2 must be positive");
}

GainSampler::GainSampler(const FadingModel& model, const RngStream& rng,
                         std::uint64_t substream)
    : model_(model), engine_(derive_seed(rng, substream)) {
  model_.validate();
}

double GainSampler::uniform01() {
  return static_cast<double>(engine_() >> 11) * 0x1.0p-53;  // [0, 1)
}

double GainSampler::normal01() {
  // Box-Muller, cosine branch only: the algorithm is pinned here rather
  // than delegated to std::normal_distribution, whose draw sequence is
  // implementation-defined and would break bit-reproducibility.
  const double u1 = uniform01();
  const double u2 = uniform01();
  const double r = std::sqrt(-2.0 * std::log1p(-u1));
  return r * std::cos(2.0 * std::numbers::pi * u2);
}

double GainSampler::gamma_shape_ge1(double shape) {
  // Marsaglia-Tsang squeeze; valid for shape >= 1.
  const double d = shape - 1.0 / 3.0;
  const double c = 1.0 / std::sqrt(9.0 * d);
  for (;;) {
    double x, v;
    do {
      x = normal01();
      v = 1.0 + c * x;
    } while (v <= 0.0);
    v = v * v * v;
    const double u = uniform01();
    if (u == 0.0) continue;
    if (u < 1.0 - 0.0331 * x * x * x * x) return d * v;
    if (std::log(u) < 0.5 * x * x + d * (1.0 - v + std::log(v))) return d * v;
  }
}

double GainSampler::next() {
  switch (model_.kind) {
    case FadingKind::constant:
      return model_.mean_gain;
    case FadingKind::rayleigh:
      return model_.mean_gain * (-std::log1p(-uniform01()));
    case FadingKind::nakagami:
      return model_.mean_gain * gamma_shape_ge1(model_.m) / model_.m;
    case FadingKind::lognormal:
      return std::exp(std::sqrt(model_.sigma2) * normal01());
  }
  return 0.0;
}

SampleBatch sample_pair(const FadingModel& m0, const FadingModel& m1,
                        const RngStream& rng, std::size_t n) {
  GainSampler s0(m0, rng, 0);
  GainSampler s1(m1, rng, 1);
  SampleBatch batch;
  batch.g0.resize(n);
  batch.g1.resize(n);
  for (std::size_t i = 0; i < n; ++i) batch.g0[i] = s0.next();
  for (std::size_t i = 0; i < n; ++i) batch.g1[i] = s1.next();
  return batch;
}

namespace {
void require_ratio_pair(const FadingModel& m0, const FadingModel& m1) {
  if (m0.kind != m1.kind)
    throw UnsupportedCombinationError("ratio distribution needs same-kind models");
  if (m0.kind == FadingKind::constant)
    throw UnsupportedCombinationError("ratio distribution undefined for constant kind");
  if (m0.kind == FadingKind::nakagami && m0.m != m1.m)
    throw UnsupportedCombinationError("ratio distribution needs equal Nakagami m");
  if (m0.kind == FadingKind::lognormal && m0.sigma2 != m1.sigma2)
    throw UnsupportedCombinationError("ratio distribution needs equal sigma2");
  if (!m0.canonical() || !m1.canonical())
    throw UnsupportedCombinationError("ratio distribution needs canonical (unit-mean) models");
}

double ln_beta(double a, double b) {
  return std::lgamma(a) + std::lgamma(b) - std::lgamma(a + b);
}
}  // namespace

double ratio_pdf(const FadingModel& m0, const FadingModel& m1, double x) {
  require_ratio_pair(m0, m1);
  if (x < 0.0) throw std::domain_error("ratio_pdf: x must be nonnegative");
  switch (m0.kind) {
    case FadingKind::rayleigh:
      return 1.0 / ((x + 1.0) * (x + 1.0));
    case FadingKind::nakagami: {
      const double m = m0.m;
      if (x == 0.0) return m > 1.0 ? 0.0 : 1.0 / std::exp(ln_beta(m, m));
      return std::exp((m - 1.0) * std::log(x) - 2.0 * m * std::log1p(x) - ln_beta(m, m));
    }
    case FadingKind::lognormal: {
      // g0/g1 = exp(Y), Y ~ Normal(0, 2*sigma2)
      if (x == 0.0) return 0.0;
      const double var = 2.0 * m0.sigma2;
      const double y = std::log(x);
      return std::exp(-y * y / (2.0 * var)) /
             (x * std::sqrt(2.0 * std::numbers::pi * var));
    }
    default:
      return 0.0;  // unreachable; constant rejected above
  }
}

double moment_inverse_g1(const FadingModel& m1) {
  m1.validate();
  if (!m1.canonical())
    throw std::invalid_argument("moment_inverse_g1: model must be canonical");
  switch (m1.kind) {
    case FadingKind::constant: return 1.0;
    case FadingKind::rayleigh: return kInf;
    case FadingKind::nakagami:
      if (m1.m == 1.0)
        throw UndefinedMomentError(
            "E[1/g] undefined for Nakagami m=1; use the rayleigh kind");
      return m1.m / (m1.m - 1.0);
    case FadingKind::lognormal: return std::exp(m1.sigma2 / 2.0);
  }
  return kInf;
}

double moment_ratio(const FadingModel& m0, const FadingModel& m1) {
  if (m0.kind == FadingKind::constant && m1.kind == FadingKind::constant) {
    if (!m0.canonical() || !m1.canonical())
      throw std::invalid_argument("moment_ratio: models must be canonical");
    return 1.0;
  }
  require_ratio_pair(m0, m1);
  switch (m0.kind) {
    case FadingKind::rayleigh: return kInf;
    case FadingKind::nakagami:
      if (m0.m == 1.0)
        throw UndefinedMomentError(
            "E[g0/g1] undefined for Nakagami m=1; use the rayleigh kind");
      return m0.m / (m0.m - 1.0);
    case FadingKind::lognormal: return std::exp(m0.sigma2);
    default: return kInf;
  }
}

}  // namespace specshare
