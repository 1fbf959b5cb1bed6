#include <cmath>
#include <numbers>

#include "checks.hpp"
#include "pathcast/propagation_models.hpp"

namespace pathcast {

using detail::require_positive;

AntennaGains okumura_antenna_gains(Meters bs_height, Meters rx_height) {
    require_positive(bs_height.value(), "bs height");
    require_positive(rx_height.value(), "rx height");
    return {20.0 * std::log10(bs_height.value() / 200.0), 10.0 * std::log10(rx_height.value() / 3.0)};
}

double okumura_free_space(Megahertz frequency, Meters distance) {
    require_positive(frequency.value(), "frequency");
    require_positive(distance.value(), "distance");
    return 20.0 * std::log10(4.0 * std::numbers::pi * (distance / wavelength(frequency)));
}

PathLossResult okumura_path_loss(const RadioLink& link, Environment env, const CurveTable& curves) {
    const AntennaGains gains = okumura_antenna_gains(link.bs_height, link.rx_height);
    const double free_space = okumura_free_space(link.frequency, link.distance);
    const double amu = amu_lookup(curves, link.frequency, link.distance);
    const double garea = garea_lookup(curves, link.frequency, env);

    PathLossResult result;
    result.add("free_space", free_space)
        .add("median_attenuation", amu)
        .add("bs_gain", -gains.bs_db)
        .add("rx_gain", -gains.rx_db)
        .add("area_gain", -garea);
    return result;
}

}  // namespace pathcast
