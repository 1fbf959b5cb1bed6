#pragma once

#include <cstddef>
#include <istream>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "pathcast/okumura_curves.hpp"
#include "pathcast/path_loss_result.hpp"
#include "pathcast/types.hpp"
#include "pathcast/units.hpp"

namespace pathcast {

enum class ModelId { sui, okumura, cost231_hata, walfisch_ikegami, ericsson9999 };

inline constexpr ModelId kAllModels[] = {ModelId::sui, ModelId::okumura, ModelId::cost231_hata,
                                         ModelId::walfisch_ikegami, ModelId::ericsson9999};

std::string_view to_string(ModelId model);
std::optional<ModelId> parse_model_id(std::string_view text);

/// One fully bound evaluation context.
struct Scenario {
    RadioLink link;
    Environment environment = Environment::urban;
    WiGeometry wi_geometry;
    EricssonCoefficients ericsson;
    FidelityMode mode = FidelityMode::corrected;
    double shadow_margin_db = 10.6;
    bool apply_shadow_margin = false;
    bool include_sui_shadowing = true;
};

/// Simulation defaults: rx 3 m, d 5 km, street 25 m, separation 50 m, roof
/// 15 m, orientation 30 deg urban / 40 deg otherwise, k 1.5 urban / 0.7
/// otherwise, shadow margin 10.6 dB urban / 8.2 dB otherwise.
Scenario default_scenario(Environment env, Meters bs_height = Meters{30.0},
                          Megahertz frequency = Megahertz{1900.0});

/// Full invariant check (link ordering, geometry ranges).
void validate(const Scenario& scenario);

/// Dispatches to the model. Walfisch-Ikegami uses the LOS formula for rural
/// (or when the geometry asks for LOS) and NLOS otherwise. The shadow margin
/// is added as a "shadow_margin" component only when apply_shadow_margin is
/// set. Throws PreconditionError("curve table required") for okumura without
/// curves.
PathLossResult evaluate(ModelId model, const Scenario& scenario, const CurveTable* curves = nullptr);

enum class Spacing { logarithmic, linear };

struct SweepOptions {
    Spacing spacing = Spacing::logarithmic;
    unsigned threads = 1;
};

struct SweepPoint {
    Meters distance;
    PathLossResult result;
};

/// `steps` distances from d_min to d_max inclusive, ascending. Any point that
/// fails aborts the sweep with a RangeError naming the distance.
std::vector<SweepPoint> sweep(ModelId model, const Scenario& scenario, Meters d_min, Meters d_max,
                              std::size_t steps, const CurveTable* curves = nullptr,
                              const SweepOptions& options = {});

std::vector<Meters> sweep_distances(Meters d_min, Meters d_max, std::size_t steps, Spacing spacing);

/// One printed row of the published model comparison.
struct ReferenceRow {
    ModelId model = ModelId::sui;
    Megahertz frequency;
    double distance_km = 0.0;
    Meters bs_height;
    Meters rx_height;
    double urban_db = 0.0;
    double suburban_db = 0.0;
    double rural_db = 0.0;

    [[nodiscard]] double printed(Environment env) const;
    bool operator==(const ReferenceRow&) const = default;
};

/// Columns: model,freq_mhz,dist_km,bs_m,rx_m,urban_db,suburban_db,rural_db.
std::vector<ReferenceRow> parse_reference_csv(std::istream& in);

/// The embedded comparison table, values verbatim.
std::span<const ReferenceRow> table3_reference();
std::string_view table3_csv();

/// Scenario defaults with the row's inputs bound in.
Scenario scenario_for_row(const ReferenceRow& row, Environment env, FidelityMode mode);

enum class Verdict { match, mismatch };
std::string_view to_string(Verdict verdict);

struct LedgerEntry {
    ReferenceRow row;
    Environment environment = Environment::urban;
    double printed_db = 0.0;
    std::optional<double> computed_db;
    std::optional<double> delta_db;  // computed - printed
    Verdict verdict = Verdict::mismatch;
    FidelityMode mode = FidelityMode::corrected;
    std::string notes;
};

struct DiscrepancyLedger {
    std::vector<LedgerEntry> entries;
    double tolerance_db = 0.5;

    [[nodiscard]] std::size_t matches() const;
};

struct CompareOptions {
    double tolerance_db = 0.5;
    FidelityMode mode = FidelityMode::corrected;
    unsigned threads = 1;
};

/// One entry per (row, environment), in row order then urban/suburban/rural.
/// Evaluation failures become notes on a mismatch entry.
DiscrepancyLedger compare_against_reference(std::span<const ReferenceRow> reference,
                                            const CompareOptions& options,
                                            const CurveTable* curves = nullptr);

/// Largest distance in [d_min, d_max] whose loss does not exceed max_loss,
/// found by bisection to within 1e-6 dB. Throws RangeError when max_loss is
/// outside [PL(d_min), PL(d_max)] and PreconditionError when sampling finds
/// the model decreasing on the bracket.
Meters invert_cell_range(ModelId model, const Scenario& scenario, double max_loss_db, Meters d_min,
                         Meters d_max, const CurveTable* curves = nullptr);

}  // namespace pathcast
