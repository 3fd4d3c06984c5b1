#include "tailcurve/inherited.hpp"

#include "tailcurve/errors.hpp"
#include "tailcurve/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

namespace tailcurve {

namespace {

constexpr double kTailEps = 1e-10;

// Quantile-spaced breakpoints put comparable probability mass in each initial
// panel, which keeps the adaptive pass cheap on power-law tails.
std::vector<double> source_breakpoints(const StudentT& source) {
    static constexpr double kProbs[] = {kTailEps, 1e-8, 1e-6, 1e-4, 1e-2, 0.1,  0.25, 0.5,
                                        0.75,     0.9,  0.99, 1.0 - 1e-4, 1.0 - 1e-6,
                                        1.0 - 1e-8, 1.0 - kTailEps};
    std::vector<double> pts;
    pts.reserve(std::size(kProbs));
    for (const double p : kProbs) {
        pts.push_back(student_quantile(source, p));
    }
    return pts;
}

}  // namespace

double inherited_pdf(const InheritedSpec& spec, double y) {
    if (spec.response.terms().size() != 1) {
        throw std::invalid_argument(
            "inherited_pdf: only single-term responses have an analytic inverse; "
            "use pushforward_sample for multi-term curves");
    }
    const SigmoidTerm& t = spec.response.terms().front();
    if (!(t.a > 0.0)) {
        throw std::domain_error("inherited_pdf: term height a must be positive");
    }
    const double k_l = spec.response.k_l();
    const double offset = y - k_l;
    if (!(offset > 0.0 && offset < t.a)) {
        throw std::domain_error("inherited_pdf: y outside the open support (k_l, k_l + a)");
    }
    const double x = inverse_single(t, k_l, y);
    const double jacobian = t.a / (t.b * offset * (t.a - offset));
    return student_pdf(spec.source, x) * jacobian;
}

SampleBatch pushforward_sample(const InheritedSpec& spec, std::uint64_t seed, std::size_t n) {
    SampleBatch batch = student_sample(spec.source, seed, n);
    for (double& v : batch.values) {
        v = eval(spec.response, v);
    }
    batch.algorithm_id += "+response";
    return batch;
}

double inherited_moment(const InheritedSpec& spec, int k) {
    if (k < 1 || k > 4) {
        throw std::domain_error("inherited_moment: order must be in 1..4");
    }
    const auto pts = source_breakpoints(spec.source);
    const auto integrand = [&spec, k](double x) {
        double y = eval(spec.response, x);
        double p = y;
        for (int i = 1; i < k; ++i) {
            p *= y;
        }
        return p * student_pdf(spec.source, x);
    };
    const QuadratureResult body = integrate(integrand, pts, 1e-13, 1e-11, 40000);

    // Beyond the eps-quantiles the response sits on its plateaus to well
    // under the quadrature tolerance, so the tail mass contributes exactly
    // plateau^k * eps per side.
    const double k_l = spec.response.k_l();
    const double k_r = spec.response.k_r();
    return body.value + (std::pow(k_l, k) + std::pow(k_r, k)) * kTailEps;
}

double inherited_kurtosis(const InheritedSpec& spec) {
    const double m1 = inherited_moment(spec, 1);
    const double m2 = inherited_moment(spec, 2);
    const double m3 = inherited_moment(spec, 3);
    const double m4 = inherited_moment(spec, 4);

    const double mu2 = m2 - m1 * m1;
    const double mu4 = m4 - 4.0 * m3 * m1 + 6.0 * m2 * m1 * m1 - 3.0 * m1 * m1 * m1 * m1;
    // variance below the cancellation floor of the raw-moment difference is
    // indistinguishable from a point mass
    if (!(mu2 > 32.0 * 2.220446049250313e-16 * (std::fabs(m2) + m1 * m1))) {
        throw std::domain_error("inherited_kurtosis: degenerate law (zero variance)");
    }
    return mu4 / (mu2 * mu2);
}

}  // namespace tailcurve
