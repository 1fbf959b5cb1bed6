#pragma once

#include <string>

namespace pathcast {

/// Locale-independent fixed-point rendering.
std::string format_fixed(double value, int decimals);

/// Shortest representation that round-trips through from_chars.
std::string format_shortest(double value);

}  // namespace pathcast
