#pragma once

#include "tailcurve/distributions.hpp"

#include <span>

namespace tailcurve {

/// Monotone transport gamma(x) sending the Student-t source exactly onto the
/// target Gaussian, defined by matching cumulatives:
///   Phi_{m,s}(gamma(x)) = F_{sigma,alpha}(x).
struct GammaMapSpec {
    StudentT source;
    GaussianSpec target;
};

/// Evaluate the transport. Tail-symmetric evaluation keeps full relative
/// precision in both directions, so the map stays finite, strictly increasing
/// and unbounded over the whole sampling range.
double gamma_map(const GammaMapSpec& spec, double x);

/// Literal closed-form expressions for alpha == 2 and alpha == 3 (the same
/// map written without the cdf composition). Cross-check companion for
/// gamma_map; throws std::domain_error for other exponents.
double gamma_map_explicit(const GammaMapSpec& spec, double x);

/// max over the grid of |gaussian_cdf(target, gamma(x)) - student_cdf(source, x)|.
double cdf_identity_residual(const GammaMapSpec& spec, std::span<const double> grid);

}  // namespace tailcurve
