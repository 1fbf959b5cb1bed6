#pragma once

#include <cstddef>
#include <istream>
#include <span>
#include <string>
#include <vector>

#include "pathcast/types.hpp"
#include "pathcast/units.hpp"

namespace pathcast {

struct AreaGainRow {
    Megahertz frequency;
    Environment environment;
    double gain_db = 0.0;

    bool operator==(const AreaGainRow&) const = default;
};

/// Sampled Okumura median attenuation A_mu(f, d) and area gain G_AREA(f, env).
///
/// Immutable once constructed. The constructor enforces the table invariants:
/// strictly increasing frequency and distance axes with at least two samples
/// each, a rectangular grid of finite values, at least two area-gain samples
/// per environment present, and zero gain for urban (the reference
/// environment).
class CurveTable {
public:
    /// `amu_db` is row-major: one row per frequency, one column per distance.
    CurveTable(std::vector<double> frequencies_mhz, std::vector<double> distances_km,
               std::vector<double> amu_db, std::vector<AreaGainRow> area_gains,
               std::string source_tag);

    [[nodiscard]] std::span<const double> frequencies_mhz() const { return frequencies_mhz_; }
    [[nodiscard]] std::span<const double> distances_km() const { return distances_km_; }
    [[nodiscard]] double amu_at(std::size_t freq_index, std::size_t dist_index) const {
        return amu_db_[freq_index * distances_km_.size() + dist_index];
    }
    [[nodiscard]] std::span<const AreaGainRow> area_gains() const { return area_gains_; }
    [[nodiscard]] const std::string& source_tag() const { return source_tag_; }

    bool operator==(const CurveTable&) const = default;

private:
    std::vector<double> frequencies_mhz_;
    std::vector<double> distances_km_;
    std::vector<double> amu_db_;
    std::vector<AreaGainRow> area_gains_;
    std::string source_tag_;
};

enum class OutOfBounds { reject, clamp };

/// Interpolated value plus a note when the query was clamped onto the grid.
struct CurveValue {
    double db = 0.0;
    bool clamped = false;
    std::string note;
};

/// Parses the curve CSV format. Throws ParseError with the offending line.
CurveTable load_curves(std::istream& in);
CurveTable load_curves_file(const std::string& path);

/// Emits the CSV format accepted by load_curves; values use the shortest
/// round-tripping representation.
std::string serialize(const CurveTable& table);

/// Bilinear in (log f, log d). Out-of-grid queries throw RangeError.
double amu_lookup(const CurveTable& table, Megahertz frequency, Meters distance);
CurveValue amu_lookup(const CurveTable& table, Megahertz frequency, Meters distance,
                      OutOfBounds policy);

/// Linear in log f along the environment's rows. Throws LookupError when the
/// environment has no rows and RangeError when f is outside them.
double garea_lookup(const CurveTable& table, Megahertz frequency, Environment env);
CurveValue garea_lookup(const CurveTable& table, Megahertz frequency, Environment env,
                        OutOfBounds policy);

}  // namespace pathcast
