#include <cmath>
#include <numbers>

#include "checks.hpp"
#include "pathcast/propagation_models.hpp"

namespace pathcast {

using detail::require_positive;

double sui_gamma(const SuiTerrainParams& params, Meters bs_height) {
    const double hb = bs_height.value();
    require_positive(hb, "bs height");
    return params.a - params.b * hb + params.c / hb;
}

double sui_reference_loss(Megahertz frequency, Meters d0) {
    require_positive(frequency.value(), "frequency");
    require_positive(d0.value(), "reference distance");
    return 20.0 * std::log10(4.0 * std::numbers::pi * (d0 / wavelength(frequency)));
}

double sui_freq_correction(Megahertz frequency) {
    require_positive(frequency.value(), "frequency");
    return 6.0 * std::log10(frequency.value() / 2000.0);
}

double sui_height_correction(Meters rx_height, SuiTerrain terrain) {
    require_positive(rx_height.value(), "rx height");
    // The 2000 divisor is kept literally even though it makes X_h large and
    // positive for handset heights.
    const double ratio = std::log10(rx_height.value() / 2000.0);
    return terrain == SuiTerrain::C ? -20.0 * ratio : -10.8 * ratio;
}

double sui_shadowing(Megahertz frequency, Environment env) {
    require_positive(frequency.value(), "frequency");
    const double alpha = env == Environment::urban ? 6.6 : 5.2;
    const double lf = std::log10(frequency.value());
    return 0.65 * lf * lf - 1.3 * lf + alpha;
}

PathLossResult sui_path_loss(const RadioLink& link, Environment env, bool include_shadowing) {
    require_positive(link.distance.value(), "distance");
    require_positive(link.sui_reference_distance.value(), "SUI reference distance");
    if (!(link.distance > link.sui_reference_distance)) {
        throw DomainError("SUI distance " + format_shortest(link.distance.value()) +
                          " m is at or below reference distance " +
                          format_shortest(link.sui_reference_distance.value()) + " m");
    }
    const SuiTerrain terrain = sui_terrain(env);
    const double gamma = sui_gamma(SuiTerrainParams::for_terrain(terrain), link.bs_height);

    PathLossResult result;
    result.add("free_space_reference", sui_reference_loss(link.frequency, link.sui_reference_distance))
        .add("distance", 10.0 * gamma * std::log10(link.distance / link.sui_reference_distance))
        .add("frequency_correction", sui_freq_correction(link.frequency))
        .add("height_correction", sui_height_correction(link.rx_height, terrain));
    if (include_shadowing) {
        result.add("shadowing", sui_shadowing(link.frequency, env));
    }
    return result;
}

}  // namespace pathcast
