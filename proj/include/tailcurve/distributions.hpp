#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace tailcurve {

/// Symmetric power-law source: scaled Student-t with scale `sigma` and tail
/// exponent `alpha`. Density
///   f(x) = (alpha / (alpha + x^2/sigma^2))^((1+alpha)/2) / (sqrt(alpha) sigma B(alpha/2, 1/2)).
struct StudentT {
    double sigma;
    double alpha;

    StudentT(double sigma_, double alpha_);
};

/// Target Gaussian with mean `m` and standard deviation `s`.
struct GaussianSpec {
    double m;
    double s;

    GaussianSpec(double m_, double s_);
};

/// A reproducible batch of draws. Replaying (seed, algorithm_id, n) yields a
/// bit-identical `values` vector.
struct SampleBatch {
    std::vector<double> values;
    std::uint64_t seed = 0;
    std::string algorithm_id;
};

double student_pdf(const StudentT& d, double x);

/// Lower-tail cumulative. Closed forms for alpha == 2 and alpha == 3,
/// regularized incomplete beta otherwise; all three branches evaluate the
/// far tails without cancellation.
double student_cdf(const StudentT& d, double x);

/// Inverse of student_cdf on (0, 1). Closed form for alpha == 2, a
/// trigonometric solve for alpha == 3, safeguarded Newton otherwise.
double student_quantile(const StudentT& d, double p);

/// n i.i.d. draws by inverse transform over a mt19937_64 stream. The 64-bit
/// outputs are mapped to (0,1) as ((word >> 11) + 0.5) * 2^-53 so the batch is
/// platform-independent; the construction is recorded in algorithm_id.
SampleBatch student_sample(const StudentT& d, std::uint64_t seed, std::size_t n);

double gaussian_cdf(const GaussianSpec& g, double y);

}  // namespace tailcurve
