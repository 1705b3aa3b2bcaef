#include "specshare/specfun.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "specshare/errors.hpp"

namespace specshare {

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();

bool is_nonpositive_integer(double x) {
  return x <= 0.0 && x == std::floor(x);
}
}  // namespace

double ln_gamma(double x) {
  if (!(x > 0.0)) throw std::domain_error("ln_gamma: argument must be positive");
#if defined(__GLIBC__)
  int sign = 0;
  return ::lgamma_r(x, &sign);
#else
  return std::lgamma(x);
#endif
}

double beta(double a, double b) {
  if (!(a > 0.0) || !(b > 0.0)) throw std::domain_error("beta: arguments must be positive");
  return std::exp(ln_gamma(a) + ln_gamma(b) - ln_gamma(a + b));
}

double erfc(double t) { return std::erfc(t); }

double hyp2f1(double a, double b, double c, double z, const SpecfunAccuracy& acc) {
  if (is_nonpositive_integer(c))
    throw std::domain_error("hyp2f1: c must not be a nonpositive integer");
  if (std::isnan(z) || z > 0.0)
    throw std::domain_error("hyp2f1: only z <= 0 is supported");
  if (z == 0.0) return 1.0;

  // Pfaff transformation onto w = z/(z-1) in (0, 1). Transforming on the
  // larger of a, b keeps the residual parameter (c - max) small; when
  // c - max is a nonpositive integer the transformed series terminates.
  const double w = z / (z - 1.0);
  double ap, bp, expo;
  if (a >= b) {
    ap = c - a;
    bp = b;
    expo = -b;
  } else {
    ap = a;
    bp = c - b;
    expo = -a;
  }
  const double prefactor = std::pow(1.0 - z, expo);

  double term = 1.0;
  double sum = 1.0;
  for (std::int64_t n = 0; n < acc.max_iter; ++n) {
    const double num = (ap + static_cast<double>(n)) * (bp + static_cast<double>(n));
    if (num == 0.0) return prefactor * sum;  // terminating series
    term *= num / ((c + static_cast<double>(n)) * (1.0 + static_cast<double>(n))) * w;
    sum += term;
    if (std::abs(term) <= acc.abs_tol * std::abs(sum) && n > 2)
      return prefactor * sum;
  }
  throw NonConvergenceError("hyp2f1: series did not converge within max_iter");
}

double lambert_w0(double x) {
  const double branch = -std::exp(-1.0);  // -1/e
  if (std::isnan(x)) throw std::domain_error("lambert_w0: NaN argument");
  if (x < branch) {
    // Tolerate rounding dust right at the branch point.
    if (x > branch * (1.0 + 8.0 * std::numeric_limits<double>::epsilon()))
      x = branch;
    else
      throw std::domain_error("lambert_w0: argument below -1/e");
  }
  if (x == 0.0) return 0.0;
  if (x == kInf) return kInf;

  // Series in p = sqrt(2(e*x + 1)) near the branch point, where the
  // derivative blows up and Newton-type steps are unreliable.
  const double q = std::exp(1.0) * x + 1.0;
  double wv;
  if (q < 1e-4) {
    const double p = std::sqrt(2.0 * q);
    return -1.0 + p * (1.0 + p * (-1.0 / 3.0 + p * (11.0 / 72.0 + p * (-43.0 / 540.0))));
  } else if (q < 0.5) {
    const double p = std::sqrt(2.0 * q);
    wv = -1.0 + p * (1.0 + p * (-1.0 / 3.0 + p * (11.0 / 72.0)));
  } else if (x < 1.0) {
    wv = x * (1.0 - x);  // two terms of the Maclaurin series
  } else {
    const double lx = std::log(x);
    const double llx = std::log(lx > 1.0 ? lx : 1.0);
    wv = lx - llx + (lx > 1.0 ? llx / lx : 0.0);
  }

  // Halley iteration on f(w) = w e^w - x.
  for (int it = 0; it < 64; ++it) {
    const double ew = std::exp(wv);
    const double f = wv * ew - x;
    const double wp1 = wv + 1.0;
    const double denom = ew * wp1 - (wv + 2.0) * f / (2.0 * wp1);
    const double step = f / denom;
    const double next = wv - step;
    if (next == wv) break;
    wv = next;
    if (std::abs(f) <= 1e-15 * std::max(1.0, std::abs(x)) && it > 0) break;
  }
  return wv;
}

}  // namespace specshare
