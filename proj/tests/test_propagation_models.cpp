#include <cmath>
#include <numbers>

#include <gtest/gtest.h>

#include "pathcast/errors.hpp"
#include "pathcast/propagation_models.hpp"
#include "test_support.hpp"

namespace pathcast {
namespace {

using namespace pathcast::literals;

RadioLink link_at(double f_mhz, double d_m, double hb = 30.0, double hr = 3.0) {
    RadioLink link;
    link.frequency = Megahertz{f_mhz};
    link.distance = Meters{d_m};
    link.bs_height = Meters{hb};
    link.rx_height = Meters{hr};
    return link;
}

double component_sum(const PathLossResult& r) {
    double s = 0.0;
    for (const auto& c : r.components()) s += c.value_db;
    return s;
}

// ---- SUI -------------------------------------------------------------------

TEST(SuiTerrain, TableValuesAndMapping) {
    const auto a = SuiTerrainParams::for_terrain(SuiTerrain::A);
    const auto b = SuiTerrainParams::for_terrain(SuiTerrain::B);
    const auto c = SuiTerrainParams::for_terrain(SuiTerrain::C);
    EXPECT_EQ(a.a, 4.6);
    EXPECT_EQ(a.b, 0.0075);
    EXPECT_EQ(a.c, 12.6);
    EXPECT_EQ(b.a, 4.0);
    EXPECT_EQ(b.b, 0.0065);
    EXPECT_EQ(b.c, 17.1);
    EXPECT_EQ(c.a, 3.6);
    EXPECT_EQ(c.b, 0.005);
    EXPECT_EQ(c.c, 20.0);
    EXPECT_EQ(sui_terrain(Environment::urban), SuiTerrain::A);
    EXPECT_EQ(sui_terrain(Environment::suburban), SuiTerrain::B);
    EXPECT_EQ(sui_terrain(Environment::rural), SuiTerrain::C);
}

TEST(SuiGamma, Examples) {
    EXPECT_NEAR(sui_gamma(SuiTerrainParams::for_terrain(SuiTerrain::A), 30_m), 4.795, 1e-12);
    EXPECT_DOUBLE_EQ(sui_gamma({4.0, 0.0, 0.0}, 57_m), 4.0);
    EXPECT_NEAR(sui_gamma(SuiTerrainParams::for_terrain(SuiTerrain::C), 20_m), 4.5, 1e-12);
    EXPECT_THROW(sui_gamma({}, 0_m), DomainError);
    EXPECT_THROW(sui_gamma({}, Meters{-3.0}), DomainError);
}

TEST(SuiReferenceLoss, Examples) {
    EXPECT_NEAR(sui_reference_loss(1900_mhz, 100_m), 78.02, 0.01);
    EXPECT_NEAR(sui_reference_loss(2100_mhz, 100_m), 78.89, 0.01);
    const Megahertz f = 1900_mhz;
    const Meters quarter = wavelength(f) / (4.0 * std::numbers::pi);
    EXPECT_NEAR(sui_reference_loss(f, quarter), 0.0, 1e-12);
}

TEST(SuiFreqCorrection, Examples) {
    EXPECT_DOUBLE_EQ(sui_freq_correction(2000_mhz), 0.0);
    EXPECT_NEAR(sui_freq_correction(1900_mhz), -0.134, 0.001);
    EXPECT_NEAR(sui_freq_correction(2100_mhz), 0.127, 0.001);
}

TEST(SuiHeightCorrection, Examples) {
    for (SuiTerrain t : {SuiTerrain::A, SuiTerrain::B, SuiTerrain::C}) {
        EXPECT_DOUBLE_EQ(sui_height_correction(2000_m, t), 0.0);
    }
    EXPECT_NEAR(sui_height_correction(3_m, SuiTerrain::A), 30.50, 0.01);
    EXPECT_NEAR(sui_height_correction(3_m, SuiTerrain::C), 56.48, 0.01);
}

TEST(SuiShadowing, AlphaBindsByEnvironmentName) {
    EXPECT_DOUBLE_EQ(sui_shadowing(1_mhz, Environment::rural), 5.2);
    EXPECT_DOUBLE_EQ(sui_shadowing(1_mhz, Environment::urban), 6.6);
    EXPECT_NEAR(sui_shadowing(1900_mhz, Environment::urban), 9.325, 0.005);
    EXPECT_NEAR(sui_shadowing(1900_mhz, Environment::suburban), 7.925, 0.005);
}

TEST(SuiPathLoss, UrbanDefaultRow) {
    const auto r = sui_path_loss(link_at(1900, 5000), Environment::urban, true);
    EXPECT_NEAR(r.total_db(), 199.19, 0.05);
    ASSERT_EQ(r.components().size(), 5u);
    EXPECT_EQ(r.components()[0].label, "free_space_reference");
    EXPECT_EQ(r.components()[4].label, "shadowing");
    EXPECT_NEAR(r.total_db(), component_sum(r), 1e-9);
}

TEST(SuiPathLoss, AtReferenceDistanceIsDomainError) {
    EXPECT_THROW(sui_path_loss(link_at(1900, 100), Environment::urban, true), DomainError);
    try {
        sui_path_loss(link_at(1900, 100), Environment::urban, true);
    } catch (const DomainError& e) {
        EXPECT_NE(std::string(e.what()).find("below reference distance"), std::string::npos);
    }
}

TEST(SuiPathLoss, HeightCorrectionVanishesAt2000m) {
    const auto r = sui_path_loss(link_at(1900, 200, 30, 2000), Environment::urban, false);
    const double gamma = sui_gamma(SuiTerrainParams::for_terrain(SuiTerrain::A), 30_m);
    const double expected = sui_reference_loss(1900_mhz, 100_m) + 10.0 * gamma * std::log10(2.0) +
                            sui_freq_correction(1900_mhz);
    EXPECT_NEAR(r.total_db(), expected, 1e-9);
    EXPECT_FALSE(r.has_component("shadowing"));
    EXPECT_DOUBLE_EQ(r.component("height_correction"), 0.0);
}

// ---- Okumura ---------------------------------------------------------------

TEST(OkumuraAntennaGains, Examples) {
    auto g = okumura_antenna_gains(200_m, 3_m);
    EXPECT_DOUBLE_EQ(g.bs_db, 0.0);
    EXPECT_DOUBLE_EQ(g.rx_db, 0.0);
    g = okumura_antenna_gains(30_m, 3_m);
    EXPECT_NEAR(g.bs_db, -16.48, 0.01);
    EXPECT_DOUBLE_EQ(g.rx_db, 0.0);
    EXPECT_NEAR(okumura_antenna_gains(80_m, 3_m).bs_db, -7.96, 0.01);
}

TEST(OkumuraPathLoss, StubTableByHand) {
    const CurveTable stub = testing::stub_curves(20.0, 9.0);
    const auto r = okumura_path_loss(link_at(1900, 5000), Environment::suburban, stub);
    EXPECT_NEAR(r.total_db(), 139.48, 0.05);
    EXPECT_NEAR(r.component("free_space"), 112.00, 0.01);
    EXPECT_NEAR(r.component("median_attenuation"), 20.0, 1e-12);
    EXPECT_NEAR(r.component("bs_gain"), 16.48, 0.01);
    EXPECT_NEAR(r.component("rx_gain"), 0.0, 1e-12);
    EXPECT_NEAR(r.component("area_gain"), -9.0, 1e-12);
}

TEST(OkumuraPathLoss, ZeroCorrectionsGiveFreeSpace) {
    const CurveTable stub = testing::stub_curves(0.0, 0.0);
    const auto r = okumura_path_loss(link_at(1900, 5000, 200, 3), Environment::suburban, stub);
    EXPECT_NEAR(r.total_db(), okumura_free_space(1900_mhz, 5000_m), 1e-12);
}

TEST(OkumuraPathLoss, OutOfGridNamesBound) {
    const CurveTable stub = testing::stub_curves(20.0, 9.0);
    try {
        okumura_path_loss(link_at(50, 5000), Environment::urban, stub);
        FAIL() << "expected RangeError";
    } catch (const RangeError& e) {
        EXPECT_NE(std::string(e.what()).find("frequency"), std::string::npos);
        EXPECT_NE(std::string(e.what()).find("minimum 100"), std::string::npos);
    }
    EXPECT_THROW(okumura_path_loss(link_at(1900, 200000), Environment::urban, stub), RangeError);
}

// ---- COST-231 Hata ---------------------------------------------------------

TEST(HataRxCorrection, Examples) {
    EXPECT_NEAR(hata_rx_correction(1900_mhz, Meters{1.0 / 11.75}, Environment::urban, FidelityMode::corrected),
                -4.97, 1e-12);
    EXPECT_NEAR(hata_rx_correction(1900_mhz, 3_m, Environment::urban, FidelityMode::corrected), 2.690, 0.005);
    EXPECT_NEAR(hata_rx_correction(1900_mhz, 3_m, Environment::suburban, FidelityMode::corrected), 4.405, 0.005);
    EXPECT_NEAR(hata_rx_correction(1900_mhz, 3_m, Environment::suburban, FidelityMode::as_printed), -2999.7, 0.05);
    EXPECT_EQ(hata_rx_correction(1900_mhz, 3_m, Environment::urban, FidelityMode::corrected),
              hata_rx_correction(1900_mhz, 3_m, Environment::urban, FidelityMode::as_printed));
}

TEST(Cost231Hata, UrbanDefaultRowBothModes) {
    for (FidelityMode m : {FidelityMode::corrected, FidelityMode::as_printed}) {
        const auto r = cost231_hata_path_loss(link_at(1900, 5000), Environment::urban, m);
        EXPECT_NEAR(r.total_db(), 161.97, 0.05);
        EXPECT_TRUE(r.warnings().empty());
    }
}

TEST(Cost231Hata, OneKilometreHasNoDistanceTerm) {
    const auto r = cost231_hata_path_loss(link_at(1900, 1000), Environment::urban, FidelityMode::corrected);
    EXPECT_DOUBLE_EQ(r.component("distance"), 0.0);
    EXPECT_NEAR(r.total_db(), 137.35, 0.05);
}

TEST(Cost231Hata, ValidityWarningOutsideBand) {
    const auto r = cost231_hata_path_loss(link_at(2100, 5000), Environment::urban, FidelityMode::corrected);
    ASSERT_EQ(r.warnings().size(), 1u);
    EXPECT_NE(r.warnings()[0].find("frequency outside model validity"), std::string::npos);
}

// ---- Walfisch-Ikegami ------------------------------------------------------

TEST(WiLos, Examples) {
    EXPECT_NEAR(wi_los_path_loss(link_at(1, 1000)).total_db(), 42.64, 1e-12);
    EXPECT_NEAR(wi_los_path_loss(link_at(1900, 5000)).total_db(), 126.39, 0.01);
    EXPECT_NEAR(wi_los_path_loss(link_at(2100, 5000)).total_db(), 127.26, 0.01);
}

TEST(WiOrientation, BranchValuesAndBoundaries) {
    EXPECT_DOUBLE_EQ(wi_orientation_loss(0_deg), -10.0);
    EXPECT_DOUBLE_EQ(wi_orientation_loss(35_deg), 2.5);
    EXPECT_NEAR(wi_orientation_loss(30_deg), 0.62, 0.001);
    EXPECT_NEAR(wi_orientation_loss(90_deg), 0.01, 0.001);
    EXPECT_DOUBLE_EQ(wi_orientation_loss(55_deg), 4.0);
    EXPECT_THROW(wi_orientation_loss(Degrees{-0.1}), DomainError);
    EXPECT_THROW(wi_orientation_loss(Degrees{90.5}), DomainError);
    EXPECT_THROW(wi_orientation_loss(Degrees{std::nan("")}), DomainError);
}

TEST(WiOrientation, DiscontinuitiesAreTheAnalyticJumps) {
    // Left limits of the first two branches against the next branch origin.
    const double jump35 = wi_orientation_loss(35_deg) - wi_orientation_loss(Degrees{34.999});
    const double analytic35 = 2.5 - (-10.0 + 0.354 * 34.999);
    EXPECT_NEAR(jump35, analytic35, 1e-12);
    EXPECT_NEAR(jump35, 0.11, 0.001);
    const double jump55 = wi_orientation_loss(55_deg) - wi_orientation_loss(Degrees{54.999});
    EXPECT_NEAR(jump55, 4.0 - (2.5 + 0.075 * 19.999), 1e-12);
    EXPECT_NEAR(jump55, 0.0, 1e-4);
}

TEST(WiRooftop, Examples) {
    WiGeometry g;
    g.street_width = 25_m;
    g.roof_height = 15_m;
    g.orientation = 30_deg;
    EXPECT_NEAR(wi_rooftop_to_street(g, 1900_mhz, 3_m), 24.11, 0.02);

    g.street_width = 10_m;
    g.roof_height = 4_m;
    g.orientation = 0_deg;
    EXPECT_NEAR(wi_rooftop_to_street(g, 10_mhz, 3_m), -26.9, 1e-12);

    g.roof_height = 3_m;
    EXPECT_THROW(wi_rooftop_to_street(g, 10_mhz, 3_m), DomainError);
}

WiGeometry urban_geometry() {
    WiGeometry g;
    g.street_width = 25_m;
    g.building_separation = 50_m;
    g.roof_height = 15_m;
    g.orientation = 30_deg;
    g.metro_factor_k = 1.5;
    return g;
}

TEST(WiMultiscreen, CorrectedUrbanDefault) {
    const auto t = wi_multiscreen_terms(urban_geometry(), link_at(1900, 5000), FidelityMode::corrected);
    EXPECT_NEAR(t.bs_height_loss_db, -21.67, 0.01);
    EXPECT_DOUBLE_EQ(t.k_a, 54.0);
    EXPECT_DOUBLE_EQ(t.k_d, 18.0);
    EXPECT_NEAR(t.k_f, -2.419, 0.001);
    EXPECT_NEAR(t.total_db, 21.69, 0.05);
}

TEST(WiMultiscreen, CorrectedUnitInputsLeaveLbshPlus54PlusKf) {
    WiGeometry g = urban_geometry();
    g.building_separation = 1_m;
    const auto t = wi_multiscreen_terms(g, link_at(925, 1000), FidelityMode::corrected);
    EXPECT_NEAR(t.k_f, -4.0, 1e-12);
    EXPECT_NEAR(t.total_db, t.bs_height_loss_db + 54.0 + t.k_f * std::log10(925.0), 1e-12);
}

TEST(WiMultiscreen, EqualHeightsGiveZeroLbsh) {
    WiGeometry g = urban_geometry();
    g.roof_height = 30_m;
    const auto t = wi_multiscreen_terms(g, link_at(1900, 5000, 30, 3), FidelityMode::corrected);
    EXPECT_DOUBLE_EQ(t.bs_height_loss_db, 0.0);
}

TEST(WiMultiscreen, AsPrintedLiteralTerms) {
    const auto t = wi_multiscreen_terms(urban_geometry(), link_at(1900, 5000), FidelityMode::as_printed);
    EXPECT_NEAR(t.k_d, 18.0 + 15.0 * (15.0 / 15.0), 1e-12);
    EXPECT_NEAR(t.k_f, -4.0 + 1.5 * 1900.0 / 924.0, 1e-12);
    for (const auto& w : t.warnings) EXPECT_EQ(w.find("garbled"), std::string::npos);
}

TEST(WiMultiscreen, AsPrintedGarbledBranchesFallBackWithWarning) {
    WiGeometry g = urban_geometry();
    g.roof_height = 40_m;  // h_t <= h_b
    const auto near = wi_multiscreen_terms(g, link_at(1900, 300, 30, 3), FidelityMode::as_printed);
    const auto fixed = wi_multiscreen_terms(g, link_at(1900, 300, 30, 3), FidelityMode::corrected);
    EXPECT_DOUBLE_EQ(near.bs_height_loss_db, fixed.bs_height_loss_db);
    EXPECT_DOUBLE_EQ(near.k_a, fixed.k_a);
    EXPECT_DOUBLE_EQ(near.k_d, fixed.k_d);
    int garbled = 0;
    for (const auto& w : near.warnings) garbled += w.starts_with("garbled branch") ? 1 : 0;
    EXPECT_EQ(garbled, 2);

    const auto far = wi_multiscreen_terms(g, link_at(1900, 2000, 30, 3), FidelityMode::as_printed);
    EXPECT_DOUBLE_EQ(far.k_a, 54.0 + 0.8 * (30.0 - 40.0));
    EXPECT_DOUBLE_EQ(far.k_d, 18.0);
}

TEST(WiMultiscreen, SymbolBindingWarningWhenReadingsDisagree) {
    const auto t = wi_multiscreen_terms(urban_geometry(), link_at(1900, 5000), FidelityMode::corrected);
    ASSERT_EQ(t.warnings.size(), 1u);
    EXPECT_TRUE(t.warnings[0].starts_with("symbol binding"));
    WiGeometry g = urban_geometry();
    g.roof_height = 30_m;
    EXPECT_TRUE(wi_multiscreen_terms(g, link_at(1900, 5000), FidelityMode::corrected).warnings.empty());
}

TEST(WiNlos, UrbanDefault) {
    const auto r = wi_nlos_path_loss(urban_geometry(), link_at(1900, 5000), FidelityMode::corrected);
    EXPECT_NEAR(r.total_db(), 157.80, 0.1);
    EXPECT_NEAR(r.component("free_space"), 112.00, 0.01);
    EXPECT_NEAR(r.total_db(), component_sum(r), 1e-9);
    EXPECT_FALSE(r.has_component("diffraction_clamp"));
}

TEST(WiNlos, NegativeDiffractionClampsToFreeSpace) {
    WiGeometry g = urban_geometry();
    g.street_width = 100_m;
    g.building_separation = 100_m;
    g.orientation = 0_deg;
    g.roof_height = 4_m;
    const auto r = wi_nlos_path_loss(g, link_at(1, 1000, 60, 3), FidelityMode::corrected);
    ASSERT_TRUE(r.has_component("diffraction_clamp"));
    EXPECT_NEAR(r.total_db(), 32.45, 1e-9);
    bool warned = false;
    for (const auto& w : r.warnings()) warned = warned || w.find("clamped") != std::string::npos;
    EXPECT_TRUE(warned);
}

TEST(WiNlos, SuburbanVariantShiftsOnlyByComponentDeltas) {
    const RadioLink link = link_at(1900, 5000);
    const WiGeometry urban = urban_geometry();
    WiGeometry sub = urban;
    sub.orientation = 40_deg;
    sub.metro_factor_k = 0.7;
    const auto a = wi_nlos_path_loss(urban, link, FidelityMode::corrected);
    const auto b = wi_nlos_path_loss(sub, link, FidelityMode::corrected);
    EXPECT_NEAR(wi_orientation_loss(40_deg), 2.875, 1e-12);
    EXPECT_NEAR(wi_multiscreen_terms(sub, link, FidelityMode::corrected).k_f, -4.0 + 0.7 * (1900.0 / 925.0 - 1.0), 1e-12);
    const double d_ori = wi_orientation_loss(40_deg) - wi_orientation_loss(30_deg);
    const double d_kf = (wi_multiscreen_terms(sub, link, FidelityMode::corrected).k_f -
                         wi_multiscreen_terms(urban, link, FidelityMode::corrected).k_f) *
                        std::log10(1900.0);
    EXPECT_NEAR(b.total_db() - a.total_db(), d_ori + d_kf, 1e-9);
    EXPECT_DOUBLE_EQ(a.component("free_space"), b.component("free_space"));
}

// ---- Ericsson --------------------------------------------------------------

TEST(EricssonGf, Examples) {
    EXPECT_DOUBLE_EQ(ericsson_gf(1_mhz), 0.0);
    EXPECT_NEAR(ericsson_gf(1900_mhz), 94.48, 0.05);
    EXPECT_NEAR(ericsson_gf(2100_mhz), 95.04, 0.05);
}

TEST(EricssonPathLoss, Examples) {
    EXPECT_NEAR(ericsson_path_loss(link_at(1900, 5000), {}, FidelityMode::as_printed).total_db(), 165.96, 0.05);
    EXPECT_NEAR(ericsson_path_loss(link_at(1, 1000, 1, 0.5), {0, 0, 0, 0}, FidelityMode::as_printed).total_db(),
                -3.664, 0.005);
    const double printed = ericsson_path_loss(link_at(1900, 5000), {}, FidelityMode::as_printed).total_db();
    const double corrected = ericsson_path_loss(link_at(1900, 5000), {}, FidelityMode::corrected).total_db();
    const double l35 = std::log10(35.25);
    const double l11 = std::log10(11.75);
    EXPECT_NEAR(printed - corrected, 3.2 * (l35 * l35 - l11 * l11), 1e-9);
    EXPECT_NEAR(printed - corrected, 3.996, 0.001);
}

TEST(EricssonCoefficients, Defaults) {
    const EricssonCoefficients c;
    EXPECT_EQ(c.a0, 36.2);
    EXPECT_EQ(c.a1, 30.2);
    EXPECT_EQ(c.a2, 12.0);
    EXPECT_EQ(c.a3, 0.1);
}

// ---- shared types ----------------------------------------------------------

TEST(PathLossResultType, RejectsDuplicateLabels) {
    PathLossResult r;
    r.add("a", 1.0);
    EXPECT_THROW(r.add("a", 2.0), std::invalid_argument);
    EXPECT_THROW((void)r.component("missing"), std::out_of_range);
}

TEST(RadioLinkType, ValidateOrderingAndPositivity) {
    EXPECT_NO_THROW(validate(link_at(1900, 5000)));
    EXPECT_THROW(validate(link_at(1900, 5000, 3, 3)), DomainError);
    EXPECT_THROW(validate(link_at(0, 5000)), DomainError);
    EXPECT_THROW(validate(link_at(1900, -1)), DomainError);
    EXPECT_NEAR(link_at(1900, 1).wavelength().value(), 299792458.0 / 1.9e9, 1e-15);
}

TEST(WiGeometryType, Validate) {
    WiGeometry g;
    EXPECT_NO_THROW(validate(g));
    g.metro_factor_k = 1.0;
    EXPECT_THROW(validate(g), DomainError);
    g.allow_custom_k = true;
    EXPECT_NO_THROW(validate(g));
    g.orientation = Degrees{91.0};
    EXPECT_THROW(validate(g), DomainError);
}

}  // namespace
}  // namespace pathcast
