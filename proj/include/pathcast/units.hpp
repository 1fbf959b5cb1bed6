#pragma once

#include <cmath>
#include <compare>

namespace pathcast {

// Tagged scalar. Arithmetic is only defined between quantities of the same tag;
// crossing units goes through the named conversions below.
template <typename Tag>
class Quantity {
public:
    constexpr Quantity() = default;
    constexpr explicit Quantity(double value) : value_(value) {}

    [[nodiscard]] constexpr double value() const { return value_; }

    constexpr auto operator<=>(const Quantity&) const = default;

    constexpr Quantity operator+(Quantity o) const { return Quantity{value_ + o.value_}; }
    constexpr Quantity operator-(Quantity o) const { return Quantity{value_ - o.value_}; }
    constexpr Quantity operator*(double s) const { return Quantity{value_ * s}; }
    constexpr Quantity operator/(double s) const { return Quantity{value_ / s}; }
    constexpr double operator/(Quantity o) const { return value_ / o.value_; }

private:
    double value_ = 0.0;
};

template <typename Tag>
constexpr Quantity<Tag> operator*(double s, Quantity<Tag> q) { return q * s; }

using Meters    = Quantity<struct MetersTag>;
using Megahertz = Quantity<struct MegahertzTag>;
using Degrees   = Quantity<struct DegreesTag>;

inline constexpr double kSpeedOfLight = 299'792'458.0;  // m/s

constexpr double to_km(Meters m) { return m.value() / 1000.0; }
constexpr Meters from_km(double km) { return Meters{km * 1000.0}; }
constexpr double to_hz(Megahertz f) { return f.value() * 1e6; }

constexpr Meters wavelength(Megahertz f) { return Meters{kSpeedOfLight / to_hz(f)}; }

namespace literals {
constexpr Meters operator""_m(long double v) { return Meters{static_cast<double>(v)}; }
constexpr Meters operator""_m(unsigned long long v) { return Meters{static_cast<double>(v)}; }
constexpr Meters operator""_km(long double v) { return from_km(static_cast<double>(v)); }
constexpr Meters operator""_km(unsigned long long v) { return from_km(static_cast<double>(v)); }
constexpr Megahertz operator""_mhz(long double v) { return Megahertz{static_cast<double>(v)}; }
constexpr Megahertz operator""_mhz(unsigned long long v) { return Megahertz{static_cast<double>(v)}; }
constexpr Degrees operator""_deg(long double v) { return Degrees{static_cast<double>(v)}; }
constexpr Degrees operator""_deg(unsigned long long v) { return Degrees{static_cast<double>(v)}; }
}  // namespace literals

}  // namespace pathcast
