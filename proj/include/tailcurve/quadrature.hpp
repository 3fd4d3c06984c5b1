#pragma once

#include <functional>
#include <span>

namespace tailcurve {

struct QuadratureResult {
    double value = 0.0;
    double error_estimate = 0.0;
    int panels = 0;
};

/// Globally adaptive Gauss-Kronrod 7/15 integration over the segments defined
/// by consecutive breakpoints. The worst panel (by error estimate) is bisected
/// until the summed estimate meets max(abs_tol, rel_tol * |integral|).
/// Throws numeric_error with diagnostics if the budget of panel splits runs out.
QuadratureResult integrate(const std::function<double(double)>& f,
                           std::span<const double> breakpoints,
                           double abs_tol = 1e-12,
                           double rel_tol = 1e-11,
                           int max_panels = 20000);

/// Convenience overload for a single interval [a, b].
QuadratureResult integrate(const std::function<double(double)>& f,
                           double a,
                           double b,
                           double abs_tol = 1e-12,
                           double rel_tol = 1e-11,
                           int max_panels = 20000);

}  // namespace tailcurve
