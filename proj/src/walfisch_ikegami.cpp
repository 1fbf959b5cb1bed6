#include <cmath>
#include <string>

#include "checks.hpp"
#include "pathcast/propagation_models.hpp"

namespace pathcast {

using detail::require_positive;

PathLossResult wi_los_path_loss(const RadioLink& link) {
    require_positive(link.frequency.value(), "frequency");
    require_positive(link.distance.value(), "distance");
    PathLossResult result;
    result.add("constant", 42.64)
        .add("distance", 26.0 * std::log10(to_km(link.distance)))
        .add("frequency", 20.0 * std::log10(link.frequency.value()));
    return result;
}

double wi_orientation_loss(Degrees orientation) {
    const double a = orientation.value();
    if (!(a >= 0.0 && a <= 90.0)) {
        throw DomainError("street orientation must be in [0, 90] degrees, got " + format_shortest(a));
    }
    if (a < 35.0) return -10.0 + 0.354 * a;
    if (a < 55.0) return 2.5 + 0.075 * (a - 35.0);
    return 4.0 - 0.114 * (a - 55.0);
}

double wi_rooftop_to_street(const WiGeometry& geometry, Megahertz frequency, Meters rx_height) {
    require_positive(geometry.street_width.value(), "street width");
    require_positive(frequency.value(), "frequency");
    const double dh = geometry.roof_height.value() - rx_height.value();
    if (!(dh > 0.0)) {
        throw DomainError("rooftop term undefined: roof height " +
                          format_shortest(geometry.roof_height.value()) +
                          " m must exceed rx height " + format_shortest(rx_height.value()) + " m");
    }
    return -16.9 - 10.0 * std::log10(geometry.street_width.value()) +
           10.0 * std::log10(frequency.value()) + 20.0 * std::log10(dh) +
           wi_orientation_loss(geometry.orientation);
}

namespace {

struct ScreenTerms {
    double l_bsh;
    double k_a;
    double k_d;
};

// h_t: base station height, h_b: roof height, d in km.
ScreenTerms corrected_terms(double ht, double hb, double d_km) {
    if (ht > hb) return {-18.0 * std::log10(1.0 + ht - hb), 54.0, 18.0};
    const double drop = hb - ht;
    const double k_a = d_km >= 0.5 ? 54.0 - 0.8 * drop : 54.0 - 0.8 * drop * d_km / 0.5;
    return {0.0, k_a, 18.0 - 15.0 * drop / hb};
}

ScreenTerms printed_terms(double ht, double hb, double d_km, std::vector<std::string>& warnings) {
    if (ht > hb) return {-18.0 * std::log10(1.0 + ht - hb), 54.0, 18.0 + 15.0 * (ht - hb) / hb};

    const ScreenTerms fix = corrected_terms(ht, hb, d_km);
    // The printed L_BSH has no usable branch for h_t <= h_b: its second line
    // is the misplaced d < 0.5 km k_A branch.
    ScreenTerms out{fix.l_bsh, 0.0, 0.0};
    warnings.emplace_back("garbled branch: L_BSH for h_t <= h_b replaced by corrected definition");
    if (d_km > 0.5) {
        out.k_a = 54.0 + 0.8 * (ht - hb);
        out.k_d = 18.0;
    } else {
        out.k_a = fix.k_a;
        out.k_d = fix.k_d;
        warnings.emplace_back(
            "garbled branch: k_A and k_D for h_t <= h_b, d <= 0.5 km replaced by corrected definition");
    }
    return out;
}

double multiscreen_sum(const ScreenTerms& t, double k_f, double d_km, double f, double sb) {
    return t.l_bsh + t.k_a + t.k_d * std::log10(d_km) + k_f * std::log10(f) - 9.0 * std::log10(sb);
}

}  // namespace

MultiscreenTerms wi_multiscreen_terms(const WiGeometry& geometry, const RadioLink& link,
                                      FidelityMode mode) {
    require_positive(link.distance.value(), "distance");
    require_positive(link.frequency.value(), "frequency");
    require_positive(geometry.building_separation.value(), "building separation");
    require_positive(geometry.roof_height.value(), "roof height");

    const double ht = link.bs_height.value();
    const double hb = geometry.roof_height.value();
    const double d_km = to_km(link.distance);
    const double f = link.frequency.value();
    const double sb = geometry.building_separation.value();
    const double k = geometry.metro_factor_k;

    MultiscreenTerms out;
    const ScreenTerms terms = mode == FidelityMode::corrected ? corrected_terms(ht, hb, d_km)
                                                              : printed_terms(ht, hb, d_km, out.warnings);
    out.bs_height_loss_db = terms.l_bsh;
    out.k_a = terms.k_a;
    out.k_d = terms.k_d;
    out.k_f = mode == FidelityMode::corrected ? -4.0 + k * (f / 925.0 - 1.0) : -4.0 + k * (f / 924.0);
    out.total_db = multiscreen_sum(terms, out.k_f, d_km, f, sb);

    // The screen formulas use h_t and h_b without defining them. Under the
    // other plausible reading (h_b as the base-station height used everywhere
    // else) the height difference vanishes.
    std::vector<std::string> ignored;
    const ScreenTerms alt = mode == FidelityMode::corrected ? corrected_terms(ht, ht, d_km)
                                                            : printed_terms(ht, ht, d_km, ignored);
    const double alt_total = multiscreen_sum(alt, out.k_f, d_km, f, sb);
    if (std::abs(alt_total - out.total_db) > 1e-9) {
        out.warnings.push_back("symbol binding: L_MSD uses h_t=bs height, h_b=roof height (" +
                               format_fixed(out.total_db, 2) + " dB); reading h_b as bs height gives " +
                               format_fixed(alt_total, 2) + " dB");
    }
    return out;
}

double wi_multiscreen(const WiGeometry& geometry, const RadioLink& link, FidelityMode mode) {
    return wi_multiscreen_terms(geometry, link, mode).total_db;
}

PathLossResult wi_nlos_path_loss(const WiGeometry& geometry, const RadioLink& link, FidelityMode mode) {
    require_positive(link.distance.value(), "distance");
    require_positive(link.frequency.value(), "frequency");
    const double f = link.frequency.value();
    const double free_space = 32.45 + 20.0 * std::log10(to_km(link.distance)) + 20.0 * std::log10(f);
    const double rts = wi_rooftop_to_street(geometry, link.frequency, link.rx_height);
    const MultiscreenTerms msd = wi_multiscreen_terms(geometry, link, mode);

    PathLossResult result;
    result.add("free_space", free_space).add("rooftop_to_street", rts).add("multiscreen", msd.total_db);
    result.warn_all(msd.warnings);

    const double bs_dh = link.bs_height.value() - link.rx_height.value();
    const double roof_dh = geometry.roof_height.value() - link.rx_height.value();
    if (bs_dh > 0.0 && std::abs(bs_dh - roof_dh) > 0.0) {
        const double alt_rts = rts - 20.0 * std::log10(roof_dh) + 20.0 * std::log10(bs_dh);
        result.warn("symbol binding: L_RTS uses roof height - rx height (" + format_fixed(rts, 2) +
                    " dB); reading h_b as bs height gives " + format_fixed(alt_rts, 2) + " dB");
    }

    const double diffraction = rts + msd.total_db;
    if (diffraction < 0.0) {
        result.add("diffraction_clamp", -diffraction);
        result.warn("negative diffraction sum " + format_fixed(diffraction, 2) +
                    " dB clamped to 0 (free-space floor)");
    }
    return result;
}

}  // namespace pathcast
