#pragma once

#include <string>
#include <vector>

namespace tailcurve {

/// One logistic term a / (1 + exp(-b x + c)). The slope b must be positive;
/// a flipped response is expressed by negating a instead.
struct SigmoidTerm {
    double a;
    double b;
    double c;
};

struct Interval {
    double lo;
    double hi;
};

/// Bounded response curve: K_L + sum of logistic terms. The right plateau
/// K_R = K_L + sum a_k is derived, never stored.
class GeneralizedSigmoid {
public:
    GeneralizedSigmoid(std::vector<SigmoidTerm> terms, double k_l);

    const std::vector<SigmoidTerm>& terms() const { return terms_; }
    double k_l() const { return k_l_; }
    double k_r() const;

private:
    std::vector<SigmoidTerm> terms_;
    double k_l_;
};

/// Shape findings for a curve: plateau values, monotonicity, inflection points
/// in ascending x order, the closure [inf, sup] of the attained values, and
/// whether the curvature sign alternates starting convex (nonnegative second
/// derivative left of the first inflection).
struct ShapeReport {
    double k_l = 0.0;
    double k_r = 0.0;
    bool monotone = false;
    std::vector<double> inflection_points;
    Interval attained_range{0.0, 0.0};
    bool satisfies_iii = false;
};

/// Evaluate the curve. Each term goes through the exp-of-negative-magnitude
/// logistic, so no |b x| overflows.
double eval(const GeneralizedSigmoid& s, double x);

/// First or second derivative (order 1 or 2), term-wise analytic.
double derivative(const GeneralizedSigmoid& s, double x, int order);

/// Invert a single positive-height term plus floor k_l:
///   x = (log((y - k_l)/(a - (y - k_l))) + c) / b.
/// y must lie strictly inside (k_l, k_l + a); the inverse diverges at the
/// saturation values.
double inverse_single(const SigmoidTerm& t, double k_l, double y);

ShapeReport validate_shape(const GeneralizedSigmoid& s);

/// Closure [inf, sup] of eval over the real line, located by critical-point
/// search between the saturation plateaus. Always contains k_l and k_r.
Interval attained_range(const GeneralizedSigmoid& s);

/// Parse the curve mini-grammar
///   sigmoid:kl=<r>;a=<r>,b=<r>,c=<r>[;a=<r>,b=<r>,c=<r>]*
/// Throws std::invalid_argument naming what failed to parse.
GeneralizedSigmoid parse_curve_spec(const std::string& text);

/// Round-trippable rendering in the same grammar (17 significant digits).
std::string format_curve_spec(const GeneralizedSigmoid& s);

}  // namespace tailcurve
