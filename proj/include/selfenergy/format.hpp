#pragma once

#include <string>

namespace selfenergy {

/// Shortest round-trip decimal representation.
std::string format_double(double x);

inline constexpr const char *library_version = "1.0.0";

} // namespace selfenergy
