#include "tailcurve/distributions.hpp"

#include "tailcurve/errors.hpp"
#include "tailcurve/special_functions.hpp"

#include <cmath>
#include <random>
#include <stdexcept>
#include <string>

namespace tailcurve {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kSqrt2 = 1.4142135623730950488;
constexpr double kSqrt3 = 1.7320508075688772935;

void require_finite(double x, const char* who) {
    if (!std::isfinite(x)) {
        throw std::domain_error(std::string(who) + ": non-finite argument");
    }
}

// Upper tail P(T > u) of the standard (sigma = 1) variant, u >= 0.
// Direct formulas cancel against 1/2 when the tail is small, so both
// closed-form branches switch to expansions out there.

double tail_alpha2(double u) {
    const double s = std::sqrt(u * u + 2.0);
    return 1.0 / (s * (s + u));
}

double tail_alpha3(double u) {
    if (u < 6.0) {
        return 0.5 - (std::atan(u / kSqrt3) + kSqrt3 * u / (u * u + 3.0)) / kPi;
    }
    // atan(w) - w/(1+w^2) = sum_{k>=1} (-1)^(k+1) (2k/(2k+1)) w^(2k+1), w = sqrt(3)/u
    const double w = kSqrt3 / u;
    const double w2 = w * w;
    double term = w * w2;
    double sum = 0.0;
    double sign = 1.0;
    for (int k = 1; k <= 60; ++k) {
        const double add = sign * (2.0 * k / (2.0 * k + 1.0)) * term;
        sum += add;
        if (std::fabs(add) <= 1e-18 * std::fabs(sum)) {
            break;
        }
        term *= w2;
        sign = -sign;
    }
    return sum / kPi;
}

double tail_general(double u, double alpha) {
    // I_z(alpha/2, 1/2) / 2 with z = alpha / (alpha + u^2) stays accurate as z -> 0.
    const double z = alpha / (alpha + u * u);
    return 0.5 * regularized_incomplete_beta(0.5 * alpha, 0.5, z);
}

double student_tail(double u, double alpha) {
    if (alpha == 2.0) return tail_alpha2(u);
    if (alpha == 3.0) return tail_alpha3(u);
    return tail_general(u, alpha);
}

// Solve E - sin(E) = M for E in [0, pi]. Used by the alpha = 3 quantile.
double solve_e_minus_sine(double m) {
    if (m <= 0.0) return 0.0;
    if (m >= kPi) return kPi;

    // E - sin E loses all digits to cancellation for small E; switch to the
    // Taylor series well before that happens.
    auto e_minus_sine = [](double e) {
        if (e >= 0.9) {
            return e - std::sin(e);
        }
        const double e2 = e * e;
        double term = e * e2 / 6.0;  // E^3/3!
        double sum = 0.0;
        for (int k = 1; k <= 20; ++k) {
            sum += term;
            term *= -e2 / ((2.0 * k + 2.0) * (2.0 * k + 3.0));
            if (std::fabs(term) <= 1e-19 * sum) {
                break;
            }
        }
        return sum;
    };

    double lo = 0.0, hi = kPi;
    double e = std::cbrt(6.0 * m);
    if (e > hi) e = 0.5 * (m + kPi);

    for (int i = 0; i < 100; ++i) {
        const double residual = e_minus_sine(e) - m;
        if (residual == 0.0) return e;
        if (residual < 0.0) {
            lo = e;
        } else {
            hi = e;
        }
        const double half = std::sin(0.5 * e);
        const double deriv = 2.0 * half * half;  // 1 - cos E
        double next = (deriv > 0.0) ? e - residual / deriv : 0.5 * (lo + hi);
        if (!(next > lo && next < hi)) {
            next = 0.5 * (lo + hi);
        }
        if (std::fabs(next - e) <= 1e-16 * (1.0 + next)) {
            return next;
        }
        e = next;
    }
    return e;
}

// Quantile of the standard (sigma = 1) variant for p in (0, 1).
double standard_quantile(double p, double alpha) {
    if (p == 0.5) return 0.0;
    if (alpha == 2.0) {
        return (2.0 * p - 1.0) / std::sqrt(2.0 * p * (1.0 - p));
    }
    if (alpha == 3.0) {
        // With E = pi - 2*atan(u/sqrt(3)), the cdf identity becomes Kepler's
        // equation E - sin E = 2*pi*q for tail mass q; invert and map back.
        const double q = (p <= 0.5) ? p : 1.0 - p;
        const double e = solve_e_minus_sine(2.0 * kPi * q);
        const double u = kSqrt3 * std::cos(0.5 * e) / std::sin(0.5 * e);
        return (p < 0.5) ? -u : u;
    }
    // General exponent: safeguarded Newton on the cdf, pdf as derivative.
    const double q = (p <= 0.5) ? p : 1.0 - p;
    double hi_bracket = 1.0;
    while (student_tail(hi_bracket, alpha) > q && hi_bracket < 1e300) {
        hi_bracket *= 8.0;
    }
    double lo = 0.0, hi = hi_bracket;
    const StudentT standard(1.0, alpha);
    double u = 0.5 * hi_bracket;
    for (int i = 0; i < 200; ++i) {
        const double residual = student_tail(u, alpha) - q;
        if (residual == 0.0) break;
        if (residual > 0.0) {
            lo = u;  // tail too heavy: u is left of the root
        } else {
            hi = u;
        }
        const double deriv = student_pdf(standard, u);
        double next = (deriv > 0.0) ? u + residual / deriv : 0.5 * (lo + hi);
        if (!(next > lo && next < hi)) {
            next = 0.5 * (lo + hi);
        }
        if (std::fabs(next - u) <= 1e-16 * (1.0 + std::fabs(next))) {
            u = next;
            break;
        }
        u = next;
    }
    return (p < 0.5) ? -u : u;
}

std::string algorithm_id_for(double alpha) {
    if (alpha == 2.0) return "mt19937_64/u53/invcdf-closed-alpha2";
    if (alpha == 3.0) return "mt19937_64/u53/invcdf-trig-alpha3";
    return "mt19937_64/u53/invcdf-newton";
}

}  // namespace

StudentT::StudentT(double sigma_, double alpha_) : sigma(sigma_), alpha(alpha_) {
    if (!(sigma > 0.0) || !std::isfinite(sigma)) {
        throw std::invalid_argument("StudentT: sigma must be positive and finite");
    }
    if (!(alpha > 0.0) || !std::isfinite(alpha)) {
        throw std::invalid_argument("StudentT: alpha must be positive and finite");
    }
}

GaussianSpec::GaussianSpec(double m_, double s_) : m(m_), s(s_) {
    if (!std::isfinite(m)) {
        throw std::invalid_argument("GaussianSpec: mean must be finite");
    }
    if (!(s > 0.0) || !std::isfinite(s)) {
        throw std::invalid_argument("GaussianSpec: standard deviation must be positive");
    }
}

double student_pdf(const StudentT& d, double x) {
    require_finite(x, "student_pdf");
    const double u = x / d.sigma;
    const double base = d.alpha / (d.alpha + u * u);
    return std::pow(base, 0.5 * (1.0 + d.alpha)) /
           (std::sqrt(d.alpha) * d.sigma * beta_fn(0.5 * d.alpha, 0.5));
}

double student_cdf(const StudentT& d, double x) {
    require_finite(x, "student_cdf");
    if (x == 0.0) return 0.5;
    const double u = x / d.sigma;
    if (u < 0.0) {
        return student_tail(-u, d.alpha);
    }
    return 1.0 - student_tail(u, d.alpha);
}

double student_quantile(const StudentT& d, double p) {
    if (!(p > 0.0 && p < 1.0)) {
        throw std::domain_error("student_quantile: p must lie strictly inside (0, 1), got " +
                                std::to_string(p));
    }
    return d.sigma * standard_quantile(p, d.alpha);
}

SampleBatch student_sample(const StudentT& d, std::uint64_t seed, std::size_t n) {
    if (n == 0) {
        throw std::domain_error("student_sample: n must be at least 1");
    }
    SampleBatch batch;
    batch.seed = seed;
    batch.algorithm_id = algorithm_id_for(d.alpha);
    batch.values.reserve(n);

    std::mt19937_64 rng(seed);
    for (std::size_t i = 0; i < n; ++i) {
        const double u = (static_cast<double>(rng() >> 11) + 0.5) * 0x1.0p-53;
        batch.values.push_back(student_quantile(d, u));
    }
    return batch;
}

double gaussian_cdf(const GaussianSpec& g, double y) {
    require_finite(y, "gaussian_cdf");
    return 0.5 * erfc(-(y - g.m) / (g.s * kSqrt2));
}

}  // namespace tailcurve
