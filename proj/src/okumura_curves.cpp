#include "pathcast/okumura_curves.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>
#include <string_view>

#include "pathcast/errors.hpp"
#include "pathcast/format.hpp"

namespace pathcast {

namespace {

constexpr Environment kEnvironments[] = {Environment::urban, Environment::suburban, Environment::rural};

void require_axis(const std::vector<double>& axis, const char* name) {
    if (axis.size() < 2) {
        throw ParseError(0, std::string(name) + " axis: >= 2 samples required");
    }
    for (std::size_t i = 0; i < axis.size(); ++i) {
        if (!std::isfinite(axis[i]) || !(axis[i] > 0.0)) {
            throw ParseError(0, std::string(name) + " axis: samples must be positive and finite");
        }
        if (i > 0 && !(axis[i] > axis[i - 1])) {
            throw ParseError(0, std::string(name) + " axis: samples must be strictly increasing");
        }
    }
}

std::vector<AreaGainRow> rows_for(std::span<const AreaGainRow> rows, Environment env) {
    std::vector<AreaGainRow> out;
    std::copy_if(rows.begin(), rows.end(), std::back_inserter(out),
                 [env](const AreaGainRow& r) { return r.environment == env; });
    return out;
}

// Index i of the cell [axis[i], axis[i+1]] holding x, and the log-space weight.
struct Bracket {
    std::size_t index;
    double weight;
};

Bracket bracket(std::span<const double> axis, double x) {
    auto it = std::upper_bound(axis.begin(), axis.end(), x);
    std::size_t i = it == axis.begin() ? 0 : static_cast<std::size_t>(it - axis.begin()) - 1;
    i = std::min(i, axis.size() - 2);
    if (x == axis[i]) return {i, 0.0};
    if (x == axis[i + 1]) return {i, 1.0};
    const double w = (std::log10(x) - std::log10(axis[i])) / (std::log10(axis[i + 1]) - std::log10(axis[i]));
    return {i, w};
}

double lerp(double a, double b, double w) { return (1.0 - w) * a + w * b; }

// Returns x clamped into [lo, hi]; throws RangeError under reject policy.
double fit_axis(double x, double lo, double hi, const char* axis, const char* unit, OutOfBounds policy,
                CurveValue& value) {
    if (!std::isfinite(x)) throw RangeError(std::string(axis) + " is not finite");
    if (x >= lo && x <= hi) return x;
    const bool below = x < lo;
    const double bound = below ? lo : hi;
    const std::string msg = std::string(axis) + " " + format_shortest(x) + " " + unit + " " +
                            (below ? "below curve table minimum " : "above curve table maximum ") +
                            format_shortest(bound) + " " + unit;
    if (policy == OutOfBounds::reject) throw RangeError(msg);
    value.clamped = true;
    if (!value.note.empty()) value.note += "; ";
    value.note += msg + " (clamped)";
    return bound;
}

std::string_view trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos) return {};
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

std::vector<std::string_view> split(std::string_view line) {
    std::vector<std::string_view> out;
    std::size_t start = 0;
    while (true) {
        const auto comma = line.find(',', start);
        out.push_back(trim(line.substr(start, comma - start)));
        if (comma == std::string_view::npos) break;
        start = comma + 1;
    }
    return out;
}

double parse_number(std::string_view field, std::size_t line_no) {
    double v = 0.0;
    const char* end = field.data() + field.size();
    auto [ptr, ec] = std::from_chars(field.data(), end, v);
    if (ec != std::errc{} || ptr != end || field.empty()) {
        throw ParseError(line_no, "malformed number '" + std::string(field) + "'");
    }
    if (!std::isfinite(v)) throw ParseError(line_no, "non-finite value '" + std::string(field) + "'");
    return v;
}

}  // namespace

CurveTable::CurveTable(std::vector<double> frequencies_mhz, std::vector<double> distances_km,
                       std::vector<double> amu_db, std::vector<AreaGainRow> area_gains,
                       std::string source_tag)
    : frequencies_mhz_(std::move(frequencies_mhz)),
      distances_km_(std::move(distances_km)),
      amu_db_(std::move(amu_db)),
      area_gains_(std::move(area_gains)),
      source_tag_(std::move(source_tag)) {
    require_axis(frequencies_mhz_, "frequency");
    require_axis(distances_km_, "distance");
    if (amu_db_.size() != frequencies_mhz_.size() * distances_km_.size()) {
        throw ParseError(0, "A_mu grid is not rectangular");
    }
    if (!std::all_of(amu_db_.begin(), amu_db_.end(), [](double v) { return std::isfinite(v); })) {
        throw ParseError(0, "A_mu grid contains non-finite values");
    }
    if (source_tag_.empty()) throw ParseError(0, "source tag is required");
    for (Environment env : kEnvironments) {
        const auto rows = rows_for(area_gains_, env);
        if (rows.empty()) continue;
        if (rows.size() < 2) {
            throw ParseError(0, "G_AREA " + std::string(to_string(env)) + ": >= 2 samples required");
        }
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (!std::isfinite(rows[i].gain_db) || !(rows[i].frequency.value() > 0.0)) {
                throw ParseError(0, "G_AREA " + std::string(to_string(env)) + ": non-finite entry");
            }
            if (i > 0 && !(rows[i].frequency > rows[i - 1].frequency)) {
                throw ParseError(0, "G_AREA " + std::string(to_string(env)) +
                                        ": frequencies must be strictly increasing");
            }
            if (env == Environment::urban && rows[i].gain_db != 0.0) {
                throw ParseError(0, "G_AREA urban must be 0 dB (reference environment)");
            }
        }
    }
}

CurveTable load_curves(std::istream& in) {
    enum class Section { amu_header, amu_rows, garea_rows };
    Section section = Section::amu_header;
    std::vector<double> freqs;
    std::vector<double> dists;
    std::vector<double> grid;
    std::vector<AreaGainRow> gains;
    std::string source;

    std::string raw;
    std::size_t line_no = 0;
    while (std::getline(in, raw)) {
        ++line_no;
        const std::string_view line = trim(raw);
        if (line.starts_with('#')) {
            const std::string_view body = trim(line.substr(1));
            if (body.starts_with("source:")) source = std::string(trim(body.substr(7)));
            continue;
        }
        if (line.empty()) {
            if (section == Section::amu_rows) section = Section::garea_rows;
            continue;
        }
        const auto fields = split(line);
        switch (section) {
            case Section::amu_header:
                if (fields[0] != "AMU") throw ParseError(line_no, "expected 'AMU,<d1_km>,...' header");
                for (std::size_t i = 1; i < fields.size(); ++i) dists.push_back(parse_number(fields[i], line_no));
                if (dists.size() < 2) throw ParseError(line_no, "distance axis: >= 2 samples required");
                for (std::size_t i = 1; i < dists.size(); ++i) {
                    if (!(dists[i] > dists[i - 1])) {
                        throw ParseError(line_no, "distance axis: samples must be strictly increasing");
                    }
                }
                section = Section::amu_rows;
                break;
            case Section::amu_rows: {
                if (fields.size() != dists.size() + 1) {
                    throw ParseError(line_no, "grid is not rectangular: expected " +
                                                  std::to_string(dists.size()) + " values, got " +
                                                  std::to_string(fields.size() - 1));
                }
                const double f = parse_number(fields[0], line_no);
                if (!freqs.empty() && !(f > freqs.back())) {
                    throw ParseError(line_no, "frequency axis: samples must be strictly increasing");
                }
                freqs.push_back(f);
                for (std::size_t i = 1; i < fields.size(); ++i) grid.push_back(parse_number(fields[i], line_no));
                break;
            }
            case Section::garea_rows: {
                if (fields[0] == "GAREA") {
                    if (fields.size() != 4 || fields[1] != "freq_mhz" || fields[2] != "environment" ||
                        fields[3] != "gain_db") {
                        throw ParseError(line_no, "expected 'GAREA,freq_mhz,environment,gain_db' header");
                    }
                    break;
                }
                if (fields.size() != 3) throw ParseError(line_no, "G_AREA row needs freq_mhz,environment,gain_db");
                const auto env = parse_environment(fields[1]);
                if (!env) throw ParseError(line_no, "unknown environment '" + std::string(fields[1]) + "'");
                gains.push_back({Megahertz{parse_number(fields[0], line_no)}, *env, parse_number(fields[2], line_no)});
                break;
            }
        }
    }
    if (section == Section::amu_header) throw ParseError(line_no, "missing AMU header");
    if (freqs.size() < 2) throw ParseError(line_no, "frequency axis: >= 2 samples required");
    if (source.empty()) throw ParseError(line_no, "missing '# source: <text>' line");
    return CurveTable(std::move(freqs), std::move(dists), std::move(grid), std::move(gains), std::move(source));
}

CurveTable load_curves_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError(0, "cannot open curve file '" + path + "'");
    return load_curves(in);
}

std::string serialize(const CurveTable& table) {
    std::ostringstream out;
    out << "AMU";
    for (double d : table.distances_km()) out << ',' << format_shortest(d);
    out << '\n';
    const auto freqs = table.frequencies_mhz();
    for (std::size_t i = 0; i < freqs.size(); ++i) {
        out << format_shortest(freqs[i]);
        for (std::size_t j = 0; j < table.distances_km().size(); ++j) out << ',' << format_shortest(table.amu_at(i, j));
        out << '\n';
    }
    out << "\nGAREA,freq_mhz,environment,gain_db\n";
    for (const auto& row : table.area_gains()) {
        out << format_shortest(row.frequency.value()) << ',' << to_string(row.environment) << ','
            << format_shortest(row.gain_db) << '\n';
    }
    out << "# source: " << table.source_tag() << '\n';
    return out.str();
}

double amu_lookup(const CurveTable& table, Megahertz frequency, Meters distance) {
    return amu_lookup(table, frequency, distance, OutOfBounds::reject).db;
}

CurveValue amu_lookup(const CurveTable& table, Megahertz frequency, Meters distance, OutOfBounds policy) {
    const auto freqs = table.frequencies_mhz();
    const auto dists = table.distances_km();
    CurveValue value;
    const double f = fit_axis(frequency.value(), freqs.front(), freqs.back(), "frequency", "MHz", policy, value);
    const double d = fit_axis(to_km(distance), dists.front(), dists.back(), "distance", "km", policy, value);
    const Bracket bf = bracket(freqs, f);
    const Bracket bd = bracket(dists, d);
    const double lo = lerp(table.amu_at(bf.index, bd.index), table.amu_at(bf.index, bd.index + 1), bd.weight);
    const double hi = lerp(table.amu_at(bf.index + 1, bd.index), table.amu_at(bf.index + 1, bd.index + 1), bd.weight);
    value.db = lerp(lo, hi, bf.weight);
    return value;
}

double garea_lookup(const CurveTable& table, Megahertz frequency, Environment env) {
    return garea_lookup(table, frequency, env, OutOfBounds::reject).db;
}

CurveValue garea_lookup(const CurveTable& table, Megahertz frequency, Environment env, OutOfBounds policy) {
    const auto rows = rows_for(table.area_gains(), env);
    if (rows.empty()) {
        throw LookupError("curve table has no G_AREA rows for environment '" + std::string(to_string(env)) + "'");
    }
    std::vector<double> freqs;
    freqs.reserve(rows.size());
    for (const auto& r : rows) freqs.push_back(r.frequency.value());
    CurveValue value;
    const double f = fit_axis(frequency.value(), freqs.front(), freqs.back(), "frequency", "MHz", policy, value);
    const Bracket b = bracket(freqs, f);
    value.db = lerp(rows[b.index].gain_db, rows[b.index + 1].gain_db, b.weight);
    return value;
}

}  // namespace pathcast
