#include <cmath>

#include "checks.hpp"
#include "pathcast/propagation_models.hpp"

namespace pathcast {

using detail::require_positive;

double hata_rx_correction(Megahertz frequency, Meters rx_height, Environment env, FidelityMode mode) {
    require_positive(frequency.value(), "frequency");
    require_positive(rx_height.value(), "rx height");
    const double f = frequency.value();
    const double hr = rx_height.value();
    const double lf = std::log10(f);
    if (env == Environment::urban) {
        const double l = std::log10(11.75 * hr);
        return 3.2 * l * l - 4.97;
    }
    if (mode == FidelityMode::as_printed) {
        // Literal transcription: the bracket misplacement and 1.58*f (not
        // 1.56*log f) are reproduced verbatim.
        return 1.1 * lf - 0.7 * hr - (1.58 * f - 0.8);
    }
    return (1.1 * lf - 0.7) * hr - (1.56 * lf - 0.8);
}

PathLossResult cost231_hata_path_loss(const RadioLink& link, Environment env, FidelityMode mode) {
    require_positive(link.frequency.value(), "frequency");
    require_positive(link.distance.value(), "distance");
    require_positive(link.bs_height.value(), "bs height");
    const double f = link.frequency.value();
    const double log_hb = std::log10(link.bs_height.value());

    PathLossResult result;
    result.add("constant", 46.3)
        .add("frequency", 33.9 * std::log10(f))
        .add("bs_height", -13.82 * log_hb)
        .add("rx_correction", -hata_rx_correction(link.frequency, link.rx_height, env, mode))
        .add("distance", (44.9 - 6.55 * log_hb) * std::log10(to_km(link.distance)))
        .add("metro_correction", env == Environment::urban ? 3.0 : 0.0);
    if (f < 1500.0 || f > 2000.0) {
        result.warn("frequency outside model validity: COST-231 Hata covers 1500-2000 MHz, got " +
                    format_shortest(f) + " MHz");
    }
    return result;
}

}  // namespace pathcast
