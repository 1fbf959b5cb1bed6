#pragma once

#include <string>
#include <utility>
#include <vector>

#include "pathcast/okumura_curves.hpp"
#include "pathcast/path_loss_result.hpp"
#include "pathcast/types.hpp"
#include "pathcast/units.hpp"

// Empirical path-loss models. Every function here is pure; all logarithms are
// base 10 and every external quantity is in meters / MHz. Models that are
// natively expressed in km convert internally.

namespace pathcast {

// ---- SUI -------------------------------------------------------------------

double sui_gamma(const SuiTerrainParams& params, Meters bs_height);
double sui_reference_loss(Megahertz frequency, Meters d0);
double sui_freq_correction(Megahertz frequency);
double sui_height_correction(Meters rx_height, SuiTerrain terrain);
double sui_shadowing(Megahertz frequency, Environment env);

/// Throws DomainError when link.distance <= d0.
PathLossResult sui_path_loss(const RadioLink& link, Environment env, bool include_shadowing);

// ---- Okumura ---------------------------------------------------------------

struct AntennaGains {
    double bs_db = 0.0;
    double rx_db = 0.0;
};

AntennaGains okumura_antenna_gains(Meters bs_height, Meters rx_height);

/// Free-space term evaluated at the actual Tx-Rx distance.
double okumura_free_space(Megahertz frequency, Meters distance);

/// Throws RangeError naming the violated axis bound when (f, d) is outside
/// the curve grid.
PathLossResult okumura_path_loss(const RadioLink& link, Environment env, const CurveTable& curves);

// ---- COST-231 Hata ---------------------------------------------------------

double hata_rx_correction(Megahertz frequency, Meters rx_height, Environment env, FidelityMode mode);

/// Attaches a validity warning when f is outside [1500, 2000] MHz.
PathLossResult cost231_hata_path_loss(const RadioLink& link, Environment env, FidelityMode mode);

// ---- COST-231 Walfisch-Ikegami ---------------------------------------------

PathLossResult wi_los_path_loss(const RadioLink& link);

/// Piecewise over [0,35), [35,55), [55,90]. Throws DomainError outside [0,90].
double wi_orientation_loss(Degrees orientation);

/// Throws DomainError when roof_height <= rx_height.
double wi_rooftop_to_street(const WiGeometry& geometry, Megahertz frequency, Meters rx_height);

/// Multi-screen diffraction broken into its terms. h_t binds to the base
/// station height and h_b to the roof height.
struct MultiscreenTerms {
    double bs_height_loss_db = 0.0;  // L_BSH
    double k_a = 0.0;
    double k_d = 0.0;
    double k_f = 0.0;
    double total_db = 0.0;
    std::vector<std::string> warnings;
};

MultiscreenTerms wi_multiscreen_terms(const WiGeometry& geometry, const RadioLink& link,
                                      FidelityMode mode);
double wi_multiscreen(const WiGeometry& geometry, const RadioLink& link, FidelityMode mode);

/// L_o + L_RTS + L_MSD. A negative diffraction sum is clamped to zero by an
/// explicit "diffraction_clamp" component, with a warning.
PathLossResult wi_nlos_path_loss(const WiGeometry& geometry, const RadioLink& link, FidelityMode mode);

// ---- Ericsson 9999 ---------------------------------------------------------

double ericsson_gf(Megahertz frequency);
PathLossResult ericsson_path_loss(const RadioLink& link, const EricssonCoefficients& coeffs,
                                  FidelityMode mode);

}  // namespace pathcast
