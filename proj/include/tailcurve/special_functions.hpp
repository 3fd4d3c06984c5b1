#pragma once

namespace tailcurve {

/// Complementary error function, 1 - erf(x). Strictly decreasing, range (0, 2).
/// Throws std::domain_error for non-finite input.
double erfc(double x);

/// Inverse of erfc on (0, 2). erfc(erfc_inv(p)) == p to ~1 ulp relative.
/// Throws std::domain_error for p <= 0 or p >= 2 (the inverse diverges there);
/// callers that can saturate must handle the throw rather than receive a clamp.
double erfc_inv(double p);

/// Euler beta function B(a, b) = Gamma(a) Gamma(b) / Gamma(a + b), a, b > 0.
/// Evaluated through log-gamma so large arguments do not overflow.
double beta_fn(double a, double b);

/// log B(a, b) for a, b > 0.
double log_beta(double a, double b);

/// Regularized incomplete beta I_x(a, b) for a, b > 0, x in [0, 1].
/// Continued-fraction evaluation (modified Lentz), accurate to ~1e-15 relative.
double regularized_incomplete_beta(double a, double b, double x);

}  // namespace tailcurve
