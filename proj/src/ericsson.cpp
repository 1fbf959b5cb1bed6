#include <cmath>

#include "checks.hpp"
#include "pathcast/propagation_models.hpp"

namespace pathcast {

using detail::require_positive;

double ericsson_gf(Megahertz frequency) {
    require_positive(frequency.value(), "frequency");
    const double lf = std::log10(frequency.value());
    return 44.49 * lf - 4.78 * lf * lf;
}

PathLossResult ericsson_path_loss(const RadioLink& link, const EricssonCoefficients& coeffs,
                                  FidelityMode mode) {
    require_positive(link.distance.value(), "distance");
    require_positive(link.bs_height.value(), "bs height");
    require_positive(link.rx_height.value(), "rx height");
    const double log_d = std::log10(to_km(link.distance));
    const double log_hb = std::log10(link.bs_height.value());
    // As printed, the receiver-height term lost its h_r and is a constant.
    const double rx_arg = mode == FidelityMode::as_printed ? 11.75 : 11.75 * link.rx_height.value();
    const double rx_log = std::log10(rx_arg);

    PathLossResult result;
    result.add("a0", coeffs.a0)
        .add("distance", coeffs.a1 * log_d)
        .add("bs_height", coeffs.a2 * log_hb)
        .add("height_distance", coeffs.a3 * log_hb * log_d)
        .add("rx_correction", -3.2 * rx_log * rx_log)
        .add("frequency", ericsson_gf(link.frequency));
    return result;
}

}  // namespace pathcast
