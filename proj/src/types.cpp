#include "pathcast/types.hpp"

#include <cmath>
#include <string>

#include "checks.hpp"
#include "pathcast/errors.hpp"
#include "pathcast/format.hpp"

namespace pathcast {

std::string_view to_string(FidelityMode mode) {
    return mode == FidelityMode::as_printed ? "as_printed" : "corrected";
}

std::string_view to_string(Environment env) {
    switch (env) {
        case Environment::urban: return "urban";
        case Environment::suburban: return "suburban";
        case Environment::rural: return "rural";
    }
    return "urban";
}

std::string_view to_string(SuiTerrain terrain) {
    switch (terrain) {
        case SuiTerrain::A: return "A";
        case SuiTerrain::B: return "B";
        case SuiTerrain::C: return "C";
    }
    return "A";
}

std::optional<FidelityMode> parse_fidelity_mode(std::string_view text) {
    if (text == "as_printed") return FidelityMode::as_printed;
    if (text == "corrected") return FidelityMode::corrected;
    return std::nullopt;
}

std::optional<Environment> parse_environment(std::string_view text) {
    if (text == "urban") return Environment::urban;
    if (text == "suburban") return Environment::suburban;
    if (text == "rural") return Environment::rural;
    return std::nullopt;
}

using detail::require_positive;

void validate(const RadioLink& link) {
    require_positive(link.frequency.value(), "frequency");
    require_positive(link.distance.value(), "distance");
    require_positive(link.rx_height.value(), "rx height");
    require_positive(link.bs_height.value(), "bs height");
    require_positive(link.sui_reference_distance.value(), "SUI reference distance");
    if (!(link.bs_height > link.rx_height)) {
        throw DomainError("bs height (" + format_shortest(link.bs_height.value()) +
                          " m) must exceed rx height (" + format_shortest(link.rx_height.value()) +
                          " m)");
    }
}

SuiTerrainParams SuiTerrainParams::for_terrain(SuiTerrain terrain) {
    switch (terrain) {
        case SuiTerrain::A: return {4.6, 0.0075, 12.6};
        case SuiTerrain::B: return {4.0, 0.0065, 17.1};
        case SuiTerrain::C: return {3.6, 0.005, 20.0};
    }
    return {};
}

void validate(const WiGeometry& geometry) {
    require_positive(geometry.street_width.value(), "street width");
    require_positive(geometry.building_separation.value(), "building separation");
    require_positive(geometry.roof_height.value(), "roof height");
    const double a = geometry.orientation.value();
    if (!(a >= 0.0 && a <= 90.0)) {
        throw DomainError("street orientation must be in [0, 90] degrees, got " + format_shortest(a));
    }
    const double k = geometry.metro_factor_k;
    if (!geometry.allow_custom_k && k != 0.7 && k != 1.5) {
        throw DomainError("metro factor k must be 0.7 or 1.5 unless explicitly overridden, got " +
                          format_shortest(k));
    }
    if (!std::isfinite(k)) throw DomainError("metro factor k must be finite");
}

}  // namespace pathcast
