#include "pathcast/format.hpp"

#include <array>
#include <charconv>

namespace pathcast {

std::string format_fixed(double value, int decimals) {
    std::array<char, 64> buf{};
    auto [end, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), value,
                                   std::chars_format::fixed, decimals);
    if (ec != std::errc{}) return "nan";
    std::string text(buf.data(), end);
    // Values that round to zero print unsigned.
    if (text.front() == '-' && text.find_first_not_of("-0.") == std::string::npos) text.erase(0, 1);
    return text;
}

std::string format_shortest(double value) {
    std::array<char, 64> buf{};
    auto [end, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), value);
    if (ec != std::errc{}) return "nan";
    return {buf.data(), end};
}

}  // namespace pathcast
