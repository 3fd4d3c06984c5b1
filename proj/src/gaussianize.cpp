#include "tailcurve/gaussianize.hpp"

#include "tailcurve/special_functions.hpp"

#include <cmath>
#include <stdexcept>

namespace tailcurve {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kSqrt2 = 1.4142135623730950488;
constexpr double kSqrt3 = 1.7320508075688772935;

}  // namespace

double gamma_map(const GammaMapSpec& spec, double x) {
    if (!std::isfinite(x)) {
        throw std::domain_error("gamma_map: non-finite argument");
    }
    if (x == 0.0) {
        return spec.target.m;
    }
    // erfc_inv near 0 is well conditioned, near 2 it is not: route both signs
    // through the small lower-tail mass of the symmetric source.
    //   x < 0:  gamma = m - sqrt(2) s erfc_inv(2 F(x))
    //   x > 0:  gamma = m + sqrt(2) s erfc_inv(2 F(-x))
    const double tail2 = 2.0 * student_cdf(spec.source, -std::fabs(x));
    const double z = erfc_inv(tail2);
    return spec.target.m + (x > 0.0 ? 1.0 : -1.0) * kSqrt2 * spec.target.s * z;
}

double gamma_map_explicit(const GammaMapSpec& spec, double x) {
    if (!std::isfinite(x)) {
        throw std::domain_error("gamma_map_explicit: non-finite argument");
    }
    const double sigma = spec.source.sigma;
    const double m = spec.target.m;
    const double s = spec.target.s;
    if (spec.source.alpha == 2.0) {
        const double denom = 2.0 * sigma * sigma + x * x;
        const double arg = sigma * x * std::sqrt(denom / (sigma * sigma)) / denom + 1.0;
        return m - kSqrt2 * s * erfc_inv(arg);
    }
    if (spec.source.alpha == 3.0) {
        const double arg = (2.0 * kSqrt3 * sigma * x / (3.0 * sigma * sigma + x * x) +
                            2.0 * std::atan(x / (kSqrt3 * sigma)) + kPi) /
                           kPi;
        return m - kSqrt2 * s * erfc_inv(arg);
    }
    throw std::domain_error("gamma_map_explicit: closed forms exist only for alpha 2 and 3");
}

double cdf_identity_residual(const GammaMapSpec& spec, std::span<const double> grid) {
    if (grid.empty()) {
        throw std::domain_error("cdf_identity_residual: empty grid");
    }
    double worst = 0.0;
    for (const double x : grid) {
        const double lhs = gaussian_cdf(spec.target, gamma_map(spec, x));
        const double rhs = student_cdf(spec.source, x);
        worst = std::max(worst, std::fabs(lhs - rhs));
    }
    return worst;
}

}  // namespace tailcurve
