#include "tailcurve/response.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

namespace tailcurve {

namespace {

// Logistic with the exponential always taken of a non-positive value.
double logistic(double t) {
    if (t >= 0.0) {
        return 1.0 / (1.0 + std::exp(-t));
    }
    const double e = std::exp(t);
    return e / (1.0 + e);
}

void require_finite(double x, const char* who) {
    if (!std::isfinite(x)) {
        throw std::domain_error(std::string(who) + ": non-finite argument");
    }
}

// x beyond which every term sits within `tol` of its plateau.
double saturation_bracket_half_width(const GeneralizedSigmoid& s, double tol) {
    double lo = 0.0, hi = 0.0;
    for (const auto& t : s.terms()) {
        const double per_term = tol / (static_cast<double>(s.terms().size()) *
                                       std::max(std::fabs(t.a), 1.0));
        const double margin = -std::log(per_term);  // logistic(t) <= e^t for t <= 0
        lo = std::min(lo, (t.c - margin) / t.b);
        hi = std::max(hi, (t.c + margin) / t.b);
    }
    return std::max(std::fabs(lo), std::fabs(hi)) + 1.0;
}

// Sign-change scan of `f` on a uniform grid over [lo, hi], each change
// polished by bisection. Grid points where f is exactly zero count as roots.
std::vector<double> scan_roots(const std::function<double(double)>& f,
                               double lo,
                               double hi,
                               int grid_points) {
    std::vector<double> roots;
    const double step = (hi - lo) / (grid_points - 1);
    double x_prev = lo;
    double f_prev = f(lo);
    for (int i = 1; i < grid_points; ++i) {
        const double x = lo + i * step;
        const double fx = f(x);
        if (f_prev == 0.0 && fx != 0.0) {
            roots.push_back(x_prev);
        } else if (f_prev != 0.0 && fx != 0.0 && std::signbit(fx) != std::signbit(f_prev)) {
            double a = x_prev, b = x, fa = f_prev;
            for (int iter = 0; iter < 200; ++iter) {
                const double mid = 0.5 * (a + b);
                if (mid <= a || mid >= b) break;
                const double fm = f(mid);
                if (fm == 0.0) {
                    a = b = mid;
                    break;
                }
                if (std::signbit(fm) == std::signbit(fa)) {
                    a = mid;
                    fa = fm;
                } else {
                    b = mid;
                }
                if (b - a <= 1e-12 * (1.0 + std::fabs(a))) break;
            }
            roots.push_back(0.5 * (a + b));
        }
        x_prev = x;
        f_prev = fx;
    }
    if (f_prev == 0.0) {
        roots.push_back(x_prev);
    }
    return roots;
}

}  // namespace

GeneralizedSigmoid::GeneralizedSigmoid(std::vector<SigmoidTerm> terms, double k_l)
    : terms_(std::move(terms)), k_l_(k_l) {
    if (terms_.empty()) {
        throw std::invalid_argument("GeneralizedSigmoid: need at least one term");
    }
    if (!std::isfinite(k_l_)) {
        throw std::invalid_argument("GeneralizedSigmoid: k_l must be finite");
    }
    for (const auto& t : terms_) {
        if (!std::isfinite(t.a) || !std::isfinite(t.b) || !std::isfinite(t.c)) {
            throw std::invalid_argument("GeneralizedSigmoid: term parameters must be finite");
        }
        if (!(t.b > 0.0)) {
            throw std::invalid_argument(
                "GeneralizedSigmoid: slope b must be positive (negate a for a "
                "decreasing term)");
        }
    }
}

double GeneralizedSigmoid::k_r() const {
    double sum = k_l_;
    for (const auto& t : terms_) {
        sum += t.a;
    }
    return sum;
}

double eval(const GeneralizedSigmoid& s, double x) {
    require_finite(x, "eval");
    double y = s.k_l();
    for (const auto& t : s.terms()) {
        y += t.a * logistic(t.b * x - t.c);
    }
    return y;
}

double derivative(const GeneralizedSigmoid& s, double x, int order) {
    require_finite(x, "derivative");
    if (order != 1 && order != 2) {
        throw std::domain_error("derivative: order must be 1 or 2");
    }
    double y = 0.0;
    for (const auto& t : s.terms()) {
        // sig*(1 - sig) as sig(t)*sig(-t): survives saturation down to the
        // exp underflow limit instead of dying where sig rounds to 1
        const double arg = t.b * x - t.c;
        const double sig_pos = logistic(arg);
        const double sig_neg = logistic(-arg);
        const double bump = sig_pos * sig_neg;
        if (order == 1) {
            y += t.a * t.b * bump;
        } else {
            y += t.a * t.b * t.b * bump * (sig_neg - sig_pos);
        }
    }
    return y;
}

double inverse_single(const SigmoidTerm& t, double k_l, double y) {
    if (!(t.a > 0.0)) {
        throw std::domain_error("inverse_single: term height a must be positive");
    }
    const double offset = y - k_l;
    if (!(offset > 0.0 && offset < t.a)) {
        throw std::domain_error("inverse_single: y must lie strictly inside (k_l, k_l + a)");
    }
    return (std::log(offset / (t.a - offset)) + t.c) / t.b;
}

Interval attained_range(const GeneralizedSigmoid& s) {
    const double half = saturation_bracket_half_width(s, 1e-12);
    double lo = std::min(s.k_l(), s.k_r());
    double hi = std::max(s.k_l(), s.k_r());
    const auto critical = scan_roots([&s](double x) { return derivative(s, x, 1); },
                                     -half, half, 4096);
    for (const double x : critical) {
        const double y = eval(s, x);
        lo = std::min(lo, y);
        hi = std::max(hi, y);
    }
    return Interval{lo, hi};
}

ShapeReport validate_shape(const GeneralizedSigmoid& s) {
    ShapeReport report;
    report.k_l = s.k_l();
    report.k_r = s.k_r();

    const double half = saturation_bracket_half_width(s, 1e-12);

    // Monotone iff the first derivative never changes sign. Grid sign scan
    // plus root polish; zero touch points alone do not break monotonicity.
    bool saw_pos = false, saw_neg = false;
    const int grid = 4096;
    for (int i = 0; i < grid; ++i) {
        const double x = -half + (2.0 * half) * i / (grid - 1);
        const double d = derivative(s, x, 1);
        saw_pos = saw_pos || d > 0.0;
        saw_neg = saw_neg || d < 0.0;
    }
    report.monotone = !(saw_pos && saw_neg);

    report.inflection_points =
        scan_roots([&s](double x) { return derivative(s, x, 2); }, -half, half, 4096);
    std::sort(report.inflection_points.begin(), report.inflection_points.end());

    report.attained_range = attained_range(s);

    // Curvature pattern: nonnegative left of the first inflection, then
    // alternating between consecutive inflections.
    report.satisfies_iii = true;
    std::vector<double> probes;
    if (report.inflection_points.empty()) {
        probes.push_back(0.0);
    } else {
        probes.push_back(report.inflection_points.front() - 1.0);
        for (size_t i = 0; i + 1 < report.inflection_points.size(); ++i) {
            probes.push_back(0.5 * (report.inflection_points[i] + report.inflection_points[i + 1]));
        }
        probes.push_back(report.inflection_points.back() + 1.0);
    }
    for (size_t i = 0; i < probes.size(); ++i) {
        const double curvature = derivative(s, probes[i], 2);
        const bool want_nonneg = (i % 2 == 0);
        if (want_nonneg ? curvature < 0.0 : curvature >= 0.0) {
            report.satisfies_iii = false;
            break;
        }
    }
    return report;
}

namespace {

double parse_field(const std::string& group, const std::string& key, size_t& cursor) {
    const std::string prefix = key + "=";
    if (group.compare(cursor, prefix.size(), prefix) != 0) {
        throw std::invalid_argument("curve spec: expected '" + key + "=' in '" + group + "'");
    }
    cursor += prefix.size();
    size_t consumed = 0;
    double value;
    try {
        value = std::stod(group.substr(cursor), &consumed);
    } catch (const std::exception&) {
        throw std::invalid_argument("curve spec: bad number for '" + key + "' in '" + group + "'");
    }
    cursor += consumed;
    return value;
}

}  // namespace

GeneralizedSigmoid parse_curve_spec(const std::string& text) {
    const std::string prefix = "sigmoid:";
    if (text.compare(0, prefix.size(), prefix) != 0) {
        throw std::invalid_argument("curve spec: must start with 'sigmoid:'");
    }

    std::vector<std::string> groups;
    size_t start = prefix.size();
    while (start <= text.size()) {
        const size_t semi = text.find(';', start);
        if (semi == std::string::npos) {
            groups.push_back(text.substr(start));
            break;
        }
        groups.push_back(text.substr(start, semi - start));
        start = semi + 1;
    }
    if (groups.size() < 2) {
        throw std::invalid_argument("curve spec: expected 'kl=...' followed by at least one term");
    }

    size_t cursor = 0;
    const double k_l = parse_field(groups[0], "kl", cursor);
    if (cursor != groups[0].size()) {
        throw std::invalid_argument("curve spec: trailing characters in '" + groups[0] + "'");
    }

    std::vector<SigmoidTerm> terms;
    for (size_t i = 1; i < groups.size(); ++i) {
        const std::string& g = groups[i];
        size_t pos = 0;
        SigmoidTerm t{};
        t.a = parse_field(g, "a", pos);
        if (pos >= g.size() || g[pos] != ',') {
            throw std::invalid_argument("curve spec: expected ',' after a= in '" + g + "'");
        }
        ++pos;
        t.b = parse_field(g, "b", pos);
        if (pos >= g.size() || g[pos] != ',') {
            throw std::invalid_argument("curve spec: expected ',' after b= in '" + g + "'");
        }
        ++pos;
        t.c = parse_field(g, "c", pos);
        if (pos != g.size()) {
            throw std::invalid_argument("curve spec: trailing characters in '" + g + "'");
        }
        terms.push_back(t);
    }
    return GeneralizedSigmoid(std::move(terms), k_l);
}

std::string format_curve_spec(const GeneralizedSigmoid& s) {
    char buf[64];
    auto num = [&buf](double v) {
        std::snprintf(buf, sizeof(buf), "%.17g", v);
        return std::string(buf);
    };
    std::string out = "sigmoid:kl=" + num(s.k_l());
    for (const auto& t : s.terms()) {
        out += ";a=" + num(t.a) + ",b=" + num(t.b) + ",c=" + num(t.c);
    }
    return out;
}

}  // namespace tailcurve
