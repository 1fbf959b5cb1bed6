#pragma once

#include <optional>
#include <string_view>

#include "pathcast/units.hpp"

namespace pathcast {

/// Selects between the formulas exactly as published and the standard
/// literature forms they were transcribed from.
enum class FidelityMode { as_printed, corrected };

enum class Environment { urban, suburban, rural };

/// SUI terrain categories, densest (A) to flattest (C).
enum class SuiTerrain { A, B, C };

constexpr SuiTerrain sui_terrain(Environment env) {
    switch (env) {
        case Environment::urban: return SuiTerrain::A;
        case Environment::suburban: return SuiTerrain::B;
        case Environment::rural: return SuiTerrain::C;
    }
    return SuiTerrain::A;
}

std::string_view to_string(FidelityMode mode);
std::string_view to_string(Environment env);
std::string_view to_string(SuiTerrain terrain);
std::optional<FidelityMode> parse_fidelity_mode(std::string_view text);
std::optional<Environment> parse_environment(std::string_view text);

struct RadioLink {
    Megahertz frequency{1900.0};
    Meters distance{5000.0};
    Meters bs_height{30.0};
    Meters rx_height{3.0};
    Meters sui_reference_distance{100.0};

    [[nodiscard]] Meters wavelength() const { return pathcast::wavelength(frequency); }
};

/// Throws DomainError unless frequency, distance and d0 are positive and
/// bs_height > rx_height > 0.
void validate(const RadioLink& link);

struct SuiTerrainParams {
    double a = 4.6;        // dimensionless
    double b = 0.0075;     // 1/m
    double c = 12.6;       // m

    static SuiTerrainParams for_terrain(SuiTerrain terrain);
};

/// Street geometry for the Walfisch-Ikegami model.
struct WiGeometry {
    Meters street_width{25.0};
    Meters building_separation{50.0};
    Meters roof_height{15.0};
    Degrees orientation{30.0};
    double metro_factor_k = 1.5;  // 0.7 suburban centres, 1.5 metropolitan
    bool los = false;
    bool allow_custom_k = false;
};

void validate(const WiGeometry& geometry);

struct EricssonCoefficients {
    double a0 = 36.2;
    double a1 = 30.2;
    double a2 = 12.0;
    double a3 = 0.1;
};

}  // namespace pathcast
