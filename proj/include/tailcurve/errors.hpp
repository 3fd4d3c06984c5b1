#pragma once

#include <stdexcept>
#include <string>

namespace tailcurve {

/// Thrown when an iterative numeric routine (quadrature, root finding)
/// fails to reach its accuracy target. The message carries diagnostics.
class numeric_error : public std::runtime_error {
public:
    explicit numeric_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace tailcurve
