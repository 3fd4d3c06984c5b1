// Test-side reference implementations, deliberately independent of the
// library code paths they are used to check: long-double series/continued
// fractions for erfc, adaptive Simpson quadrature, central finite
// differences, and an inverse-transform normal sampler.
#pragma once

#include <cmath>
#include <cstdint>
#include <functional>
#include <random>
#include <vector>

namespace oracle {

inline long double erfc_ld(long double x);

// Maclaurin series for erf, long double. Converges fast for |x| <= 3.
inline long double erf_series(long double x) {
    const long double x2 = x * x;
    long double term = x;
    long double sum = x;
    for (int n = 1; n < 200; ++n) {
        term *= -x2 / n;
        const long double add = term / (2 * n + 1);
        sum += add;
        if (std::fabs(add) < 1e-22L * std::fabs(sum)) {
            break;
        }
    }
    return sum * 2.0L / std::sqrt(3.14159265358979323846264338328L);
}

// Laplace continued fraction for erfc, long double, good for x >= 3:
//   erfc(x) = exp(-x^2)/sqrt(pi) * 1/(x + (1/2)/(x + 1/(x + (3/2)/(x + ...))))
inline long double erfc_cf(long double x) {
    const int depth = 120;
    long double tail = 0.0L;
    for (int k = depth; k >= 1; --k) {
        tail = (k / 2.0L) / (x + tail);
    }
    return std::exp(-x * x) / std::sqrt(3.14159265358979323846264338328L) / (x + tail);
}

inline long double erfc_ld(long double x) {
    if (x < 0) {
        return 2.0L - erfc_ld(-x);
    }
    if (x <= 3.0L) {
        return 1.0L - erf_series(x);
    }
    return erfc_cf(x);
}

// Bisection inverse of the erfc oracle on (0, 2).
inline long double erfc_inv_ld(long double p) {
    long double lo = -30.0L, hi = 30.0L;
    for (int i = 0; i < 200; ++i) {
        const long double mid = 0.5L * (lo + hi);
        if (erfc_ld(mid) > p) {
            lo = mid;  // erfc decreasing
        } else {
            hi = mid;
        }
    }
    return 0.5L * (lo + hi);
}

// Adaptive Simpson, independent of the library's Gauss-Kronrod scheme.
inline double simpson_rec(const std::function<double(double)>& f,
                          double a, double b,
                          double fa, double fm, double fb,
                          double whole, double tol, int depth) {
    const double m = 0.5 * (a + b);
    const double lm = 0.5 * (a + m);
    const double rm = 0.5 * (m + b);
    const double flm = f(lm);
    const double frm = f(rm);
    const double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
    const double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
    const double delta = left + right - whole;
    if (depth <= 0 || std::fabs(delta) <= 15.0 * tol) {
        return left + right + delta / 15.0;
    }
    return simpson_rec(f, a, m, fa, flm, fm, left, 0.5 * tol, depth - 1) +
           simpson_rec(f, m, b, fm, frm, fb, right, 0.5 * tol, depth - 1);
}

inline double integrate_simpson(const std::function<double(double)>& f,
                                double a, double b, double tol = 1e-10, int depth = 48) {
    const double fa = f(a);
    const double fb = f(b);
    const double fm = f(0.5 * (a + b));
    const double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
    return simpson_rec(f, a, b, fa, fm, fb, whole, tol, depth);
}

// Central finite difference, step scaled to the argument.
inline double central_diff(const std::function<double(double)>& f, double x,
                           double h_scale = 1e-5) {
    const double h = h_scale * std::max(1.0, std::fabs(x));
    return (f(x + h) - f(x - h)) / (2.0 * h);
}

// Seeded normal batch for statistical reference samples; the assertions built
// on it use multi-sigma bands, so the stdlib sampler is fine here.
inline std::vector<double> normal_sample(std::uint64_t seed, std::size_t n,
                                         double mean = 0.0, double sd = 1.0) {
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> normal(mean, sd);
    std::vector<double> out;
    out.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        out.push_back(normal(rng));
    }
    return out;
}

// Coarse golden-section maximum refinement used by the attained-range check.
inline double golden_max(const std::function<double(double)>& f, double a, double b) {
    const double inv_phi = 0.6180339887498949;
    double x1 = b - inv_phi * (b - a);
    double x2 = a + inv_phi * (b - a);
    double f1 = f(x1), f2 = f(x2);
    for (int i = 0; i < 200 && (b - a) > 1e-13 * (1.0 + std::fabs(a)); ++i) {
        if (f1 < f2) {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = a + inv_phi * (b - a);
            f2 = f(x2);
        } else {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = b - inv_phi * (b - a);
            f1 = f(x1);
        }
    }
    return std::max(f1, f2);
}

}  // namespace oracle
