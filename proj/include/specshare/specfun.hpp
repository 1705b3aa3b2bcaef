#pragma once

#include <cstdint>

namespace specshare {

// Truncation controls for the series/iterative evaluations below.
struct SpecfunAccuracy {
  double abs_tol = 1e-14;   // relative term-size cutoff for series
  std::int64_t max_iter = 1'000'000;
};

// ln Gamma(x) for x > 0. Throws std::domain_error otherwise.
double ln_gamma(double x);

// Beta function B(a, b) = Gamma(a)Gamma(b)/Gamma(a+b), a, b > 0,
// evaluated through ln_gamma so large arguments do not overflow.
double beta(double a, double b);

// Complementary error function, (2/sqrt(pi)) * integral_t^inf exp(-x^2) dx.
double erfc(double t);

// Gauss hypergeometric function 2F1(a, b; c; z) for z <= 0.
// The defining series diverges for z < -1, so the argument is mapped to
// z/(z-1) in [0, 1) by a Pfaff transformation and the series is summed
// there. Throws std::domain_error for z > 0 or c a nonpositive integer,
// NonConvergenceError if max_iter is exhausted.
double hyp2f1(double a, double b, double c, double z, const SpecfunAccuracy& acc = {});

// Principal branch W0 of the Lambert W function: the w >= -1 with
// w * exp(w) = x, defined for x >= -1/e. Throws std::domain_error below
// the branch point.
double lambert_w0(double x);

}  // namespace specshare
