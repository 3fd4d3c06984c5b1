#pragma once

namespace tailcurve {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace tailcurve
