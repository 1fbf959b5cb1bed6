#include "pathcast/scenario_engine.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <sstream>
#include <thread>

#include "pathcast/errors.hpp"
#include "pathcast/format.hpp"
#include "pathcast/propagation_models.hpp"

namespace pathcast {

namespace detail {
extern const std::string_view kTable3Csv;
}

namespace {

// Runs body(i) for i in [0, n) over `threads` workers with a static
// interleaved partition. Results must be written by index.
template <typename Body>
void parallel_for(std::size_t n, unsigned threads, Body&& body) {
    const std::size_t workers = std::clamp<std::size_t>(threads, 1, std::max<std::size_t>(n, 1));
    if (workers == 1) {
        for (std::size_t i = 0; i < n; ++i) body(i);
        return;
    }
    std::vector<std::exception_ptr> errors(workers);
    {
        std::vector<std::jthread> pool;
        pool.reserve(workers);
        for (std::size_t w = 0; w < workers; ++w) {
            pool.emplace_back([&, w] {
                try {
                    for (std::size_t i = w; i < n; i += workers) body(i);
                } catch (...) {
                    errors[w] = std::current_exception();
                }
            });
        }
    }
    for (auto& e : errors) {
        if (e) std::rethrow_exception(e);
    }
}

Scenario at_distance(const Scenario& scenario, Meters d) {
    Scenario s = scenario;
    s.link.distance = d;
    return s;
}

}  // namespace

std::string_view to_string(ModelId model) {
    switch (model) {
        case ModelId::sui: return "sui";
        case ModelId::okumura: return "okumura";
        case ModelId::cost231_hata: return "cost231_hata";
        case ModelId::walfisch_ikegami: return "walfisch_ikegami";
        case ModelId::ericsson9999: return "ericsson9999";
    }
    return "sui";
}

std::optional<ModelId> parse_model_id(std::string_view text) {
    for (ModelId m : kAllModels) {
        if (to_string(m) == text) return m;
    }
    return std::nullopt;
}

std::string_view to_string(Verdict verdict) {
    return verdict == Verdict::match ? "match" : "mismatch";
}

Scenario default_scenario(Environment env, Meters bs_height, Megahertz frequency) {
    Scenario s;
    s.environment = env;
    s.link.frequency = frequency;
    s.link.distance = Meters{5000.0};
    s.link.bs_height = bs_height;
    s.link.rx_height = Meters{3.0};
    s.link.sui_reference_distance = Meters{100.0};
    s.wi_geometry.street_width = Meters{25.0};
    s.wi_geometry.building_separation = Meters{50.0};
    s.wi_geometry.roof_height = Meters{15.0};
    const bool urban = env == Environment::urban;
    s.wi_geometry.orientation = Degrees{urban ? 30.0 : 40.0};
    s.wi_geometry.metro_factor_k = urban ? 1.5 : 0.7;
    s.wi_geometry.los = false;
    s.shadow_margin_db = urban ? 10.6 : 8.2;
    return s;
}

void validate(const Scenario& scenario) {
    validate(scenario.link);
    validate(scenario.wi_geometry);
    if (!std::isfinite(scenario.shadow_margin_db)) throw DomainError("shadow margin must be finite");
}

PathLossResult evaluate(ModelId model, const Scenario& scenario, const CurveTable* curves) {
    validate(scenario);
    const RadioLink& link = scenario.link;
    PathLossResult result;
    switch (model) {
        case ModelId::sui:
            result = sui_path_loss(link, scenario.environment, scenario.include_sui_shadowing);
            break;
        case ModelId::okumura:
            if (curves == nullptr) throw PreconditionError("curve table required for okumura");
            result = okumura_path_loss(link, scenario.environment, *curves);
            break;
        case ModelId::cost231_hata:
            result = cost231_hata_path_loss(link, scenario.environment, scenario.mode);
            break;
        case ModelId::walfisch_ikegami:
            if (scenario.environment == Environment::rural || scenario.wi_geometry.los) {
                result = wi_los_path_loss(link);
            } else {
                result = wi_nlos_path_loss(scenario.wi_geometry, link, scenario.mode);
            }
            break;
        case ModelId::ericsson9999:
            result = ericsson_path_loss(link, scenario.ericsson, scenario.mode);
            break;
    }
    if (scenario.apply_shadow_margin) result.add("shadow_margin", scenario.shadow_margin_db);
    return result;
}

std::vector<Meters> sweep_distances(Meters d_min, Meters d_max, std::size_t steps, Spacing spacing) {
    if (steps < 2) throw PreconditionError("sweep needs at least 2 steps");
    if (!(d_min.value() > 0.0) || !(d_min < d_max)) {
        throw PreconditionError("sweep needs 0 < d_min < d_max, got " + format_shortest(d_min.value()) +
                                " m and " + format_shortest(d_max.value()) + " m");
    }
    std::vector<Meters> out(steps);
    const double last = static_cast<double>(steps - 1);
    for (std::size_t i = 0; i < steps; ++i) {
        const double t = static_cast<double>(i) / last;
        out[i] = spacing == Spacing::logarithmic
                     ? Meters{d_min.value() * std::pow(d_max / d_min, t)}
                     : Meters{d_min.value() + (d_max.value() - d_min.value()) * t};
    }
    out.front() = d_min;
    out.back() = d_max;
    return out;
}

std::vector<SweepPoint> sweep(ModelId model, const Scenario& scenario, Meters d_min, Meters d_max,
                              std::size_t steps, const CurveTable* curves, const SweepOptions& options) {
    const auto distances = sweep_distances(d_min, d_max, steps, options.spacing);
    std::vector<SweepPoint> series(distances.size());
    parallel_for(distances.size(), options.threads, [&](std::size_t i) {
        try {
            series[i] = {distances[i], evaluate(model, at_distance(scenario, distances[i]), curves)};
        } catch (const std::exception& e) {
            throw RangeError("sweep aborted at distance " + format_shortest(distances[i].value()) +
                             " m: " + e.what());
        }
    });
    return series;
}

double ReferenceRow::printed(Environment env) const {
    switch (env) {
        case Environment::urban: return urban_db;
        case Environment::suburban: return suburban_db;
        case Environment::rural: return rural_db;
    }
    return urban_db;
}

std::vector<ReferenceRow> parse_reference_csv(std::istream& in) {
    std::vector<ReferenceRow> rows;
    std::string line;
    std::size_t line_no = 0;
    bool header_seen = false;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty() || line.front() == '#') continue;
        if (!header_seen) {
            if (line != "model,freq_mhz,dist_km,bs_m,rx_m,urban_db,suburban_db,rural_db") {
                throw ParseError(line_no, "unexpected reference header '" + line + "'");
            }
            header_seen = true;
            continue;
        }
        std::vector<std::string> fields;
        std::stringstream ss(line);
        for (std::string f; std::getline(ss, f, ',');) fields.push_back(f);
        if (fields.size() != 8) throw ParseError(line_no, "expected 8 fields");
        const auto model = parse_model_id(fields[0]);
        if (!model) throw ParseError(line_no, "unknown model '" + fields[0] + "'");
        auto num = [&](const std::string& s) {
            std::size_t used = 0;
            double v = 0.0;
            try {
                v = std::stod(s, &used);
            } catch (const std::exception&) {
                used = 0;
            }
            if (used != s.size() || s.empty()) throw ParseError(line_no, "malformed number '" + s + "'");
            return v;
        };
        rows.push_back({*model, Megahertz{num(fields[1])}, num(fields[2]), Meters{num(fields[3])},
                        Meters{num(fields[4])}, num(fields[5]), num(fields[6]), num(fields[7])});
    }
    if (!header_seen) throw ParseError(line_no, "missing reference header");
    return rows;
}

std::string_view table3_csv() { return detail::kTable3Csv; }

std::span<const ReferenceRow> table3_reference() {
    static const std::vector<ReferenceRow> rows = [] {
        std::istringstream in{std::string(detail::kTable3Csv)};
        return parse_reference_csv(in);
    }();
    return rows;
}

Scenario scenario_for_row(const ReferenceRow& row, Environment env, FidelityMode mode) {
    Scenario s = default_scenario(env, row.bs_height, row.frequency);
    s.link.distance = from_km(row.distance_km);
    s.link.rx_height = row.rx_height;
    s.mode = mode;
    return s;
}

std::size_t DiscrepancyLedger::matches() const {
    return static_cast<std::size_t>(std::count_if(entries.begin(), entries.end(),
                                                  [](const LedgerEntry& e) { return e.verdict == Verdict::match; }));
}

DiscrepancyLedger compare_against_reference(std::span<const ReferenceRow> reference,
                                            const CompareOptions& options, const CurveTable* curves) {
    if (!(options.tolerance_db > 0.0)) throw PreconditionError("tolerance must be positive");
    constexpr Environment envs[] = {Environment::urban, Environment::suburban, Environment::rural};

    DiscrepancyLedger ledger;
    ledger.tolerance_db = options.tolerance_db;
    ledger.entries.resize(reference.size() * 3);
    parallel_for(ledger.entries.size(), options.threads, [&](std::size_t i) {
        const ReferenceRow& row = reference[i / 3];
        const Environment env = envs[i % 3];
        LedgerEntry& entry = ledger.entries[i];
        entry.row = row;
        entry.environment = env;
        entry.printed_db = row.printed(env);
        entry.mode = options.mode;
        entry.notes = "mode=" + std::string(to_string(options.mode));
        if (row.model == ModelId::walfisch_ikegami && env == Environment::rural) entry.notes += "; LOS formula";
        if (row.model == ModelId::ericsson9999 && row.rural_db > row.urban_db) {
            entry.notes += "; printed anomaly: rural loss exceeds urban";
        }
        try {
            const double computed = evaluate(row.model, scenario_for_row(row, env, options.mode), curves).total_db();
            entry.computed_db = computed;
            entry.delta_db = computed - entry.printed_db;
            entry.verdict = std::abs(*entry.delta_db) <= options.tolerance_db ? Verdict::match : Verdict::mismatch;
        } catch (const std::exception& e) {
            entry.verdict = Verdict::mismatch;
            entry.notes += "; evaluation failed: ";
            entry.notes += e.what();
        }
    });
    return ledger;
}

Meters invert_cell_range(ModelId model, const Scenario& scenario, double max_loss_db, Meters d_min,
                         Meters d_max, const CurveTable* curves) {
    if (!(d_min.value() > 0.0) || !(d_min < d_max)) {
        throw PreconditionError("cell range needs 0 < d_min < d_max");
    }
    if (!std::isfinite(max_loss_db)) throw PreconditionError("max loss must be finite");
    auto loss = [&](double d) { return evaluate(model, at_distance(scenario, Meters{d}), curves).total_db(); };

    const double lo_loss = loss(d_min.value());
    const double hi_loss = loss(d_max.value());
    if (max_loss_db < lo_loss || max_loss_db > hi_loss) {
        throw RangeError("max loss " + format_fixed(max_loss_db, 2) + " dB outside bracket: PL(" +
                         format_shortest(d_min.value()) + " m) = " + format_fixed(lo_loss, 2) + " dB, PL(" +
                         format_shortest(d_max.value()) + " m) = " + format_fixed(hi_loss, 2) + " dB");
    }

    constexpr std::size_t kProbes = 64;
    const auto probes = sweep_distances(d_min, d_max, kProbes, Spacing::logarithmic);
    double previous = lo_loss;
    for (std::size_t i = 1; i < probes.size(); ++i) {
        const double v = i + 1 == probes.size() ? hi_loss : loss(probes[i].value());
        if (v < previous) {
            throw PreconditionError("path loss decreases between " + format_shortest(probes[i - 1].value()) +
                                    " m and " + format_shortest(probes[i].value()) + " m; inversion needs a monotone model");
        }
        previous = v;
    }

    if (max_loss_db == hi_loss) return d_max;
    if (max_loss_db == lo_loss) return d_min;

    constexpr double kLossTolerance = 1e-6;
    double lo = d_min.value();
    double hi = d_max.value();
    while (true) {
        const double mid = lo + 0.5 * (hi - lo);
        if (!(mid > lo && mid < hi)) break;
        const double v = loss(mid);
        if (v <= max_loss_db) {
            lo = mid;
            if (max_loss_db - v <= kLossTolerance) break;
        } else {
            hi = mid;
        }
    }
    return Meters{lo};
}

}  // namespace pathcast
