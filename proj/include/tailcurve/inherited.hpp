#pragma once

#include "tailcurve/distributions.hpp"
#include "tailcurve/response.hpp"

#include <cstdint>

namespace tailcurve {

/// The law of eval(response, X) with X ~ source. Its support is the closure
/// of the attained range of the response, so it is compact for every source.
struct InheritedSpec {
    GeneralizedSigmoid response;
    StudentT source;
};

/// Density of the inherited law for a single-term response with a > 0,
/// obtained by change of variables:
///   g(y) = f(S^-1(y)) * a / (b (y - k_l) (a - (y - k_l))).
/// y must lie strictly inside (k_l, k_l + a); the density diverges
/// (integrably) toward both ends. Multi-term curves have no analytic inverse
/// and are rejected.
double inherited_pdf(const InheritedSpec& spec, double y);

/// y_i = eval(response, x_i) over a student_sample batch; deterministic in
/// (seed, n) and bounded by the attained range of the response.
SampleBatch pushforward_sample(const InheritedSpec& spec, std::uint64_t seed, std::size_t n);

/// Raw moment E[S(X)^k], k in 1..4, integrated in source space between the
/// eps = 1e-10 source quantiles where the response is saturated, plus the
/// exact plateau tail corrections (k_l^k + k_r^k) * eps.
double inherited_moment(const InheritedSpec& spec, int k);

/// Raw kurtosis mu4 / mu2^2 of the centered inherited law, assembled from
/// inherited_moment. Gaussian reference value is 3.
double inherited_kurtosis(const InheritedSpec& spec);

}  // namespace tailcurve
