#include <algorithm>
#include <iomanip>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "pathcast/cli.hpp"
#include "pathcast/errors.hpp"
#include "pathcast/format.hpp"

namespace pathcast::cli {

namespace {

using nlohmann::ordered_json;

std::string f2(double v) { return format_fixed(v, 2); }

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

ordered_json inputs_json(const RunConfig& config) {
    const Scenario& s = config.scenario;
    return {{"freq_mhz", s.link.frequency.value()},
            {"distance_m", s.link.distance.value()},
            {"bs_m", s.link.bs_height.value()},
            {"rx_m", s.link.rx_height.value()}};
}

ordered_json result_json(const PathLossResult& r) {
    ordered_json components = ordered_json::array();
    for (const auto& c : r.components()) components.push_back({{"label", c.label}, {"value_db", c.value_db}});
    return {{"total_db", r.total_db()}, {"components", components}, {"warnings", r.warnings()}};
}

void print_warnings(std::ostream& err, const PathLossResult& r) {
    for (const auto& w : r.warnings()) err << "warning: " << w << '\n';
}

// Simple left-aligned text table.
void print_table(std::ostream& out, const std::vector<std::vector<std::string>>& rows) {
    if (rows.empty()) return;
    std::vector<std::size_t> widths(rows.front().size(), 0);
    for (const auto& row : rows) {
        for (std::size_t i = 0; i < row.size(); ++i) widths[i] = std::max(widths[i], row[i].size());
    }
    for (const auto& row : rows) {
        std::string line;
        for (std::size_t i = 0; i < row.size(); ++i) {
            line += row[i];
            if (i + 1 < row.size()) line += std::string(widths[i] - row[i].size() + 2, ' ');
        }
        out << line << '\n';
    }
}

const CurveTable* maybe_curves(const RunConfig& config, std::unique_ptr<CurveTable>& storage) {
    if (!config.curve_file) return nullptr;
    storage = std::make_unique<CurveTable>(load_curves_file(*config.curve_file));
    return storage.get();
}

std::string csv_record(const RunConfig& config, Meters distance, double loss) {
    const Scenario& s = config.scenario;
    return f2(distance.value()) + ',' + std::string(to_string(config.model)) + ',' +
           std::string(to_string(s.environment)) + ',' + f2(s.link.frequency.value()) + ',' +
           f2(s.link.bs_height.value()) + ',' + f2(s.link.rx_height.value()) + ',' +
           std::string(to_string(s.mode)) + ',' + f2(loss);
}

constexpr const char* kSeriesHeader = "distance_m,model,environment,freq_mhz,bs_m,rx_m,mode,path_loss_db";

int run_pathloss(const RunConfig& config, const CurveTable* curves, std::ostream& out, std::ostream& err) {
    const PathLossResult r = evaluate(config.model, config.scenario, curves);
    switch (config.output) {
        case OutputFormat::csv:
            out << kSeriesHeader << '\n' << csv_record(config, config.scenario.link.distance, r.total_db()) << '\n';
            print_warnings(err, r);
            break;
        case OutputFormat::json: {
            ordered_json doc = {{"model", to_string(config.model)},
                                {"environment", to_string(config.scenario.environment)},
                                {"mode", to_string(config.scenario.mode)},
                                {"inputs", inputs_json(config)}};
            doc.update(result_json(r));
            out << doc.dump(2) << '\n';
            break;
        }
        case OutputFormat::table: {
            std::vector<std::vector<std::string>> rows{{"component", "dB"}};
            for (const auto& c : r.components()) rows.push_back({c.label, f2(c.value_db)});
            rows.push_back({"total", f2(r.total_db())});
            out << to_string(config.model) << ' ' << to_string(config.scenario.environment) << ' '
                << f2(config.scenario.link.frequency.value()) << " MHz at "
                << f2(config.scenario.link.distance.value()) << " m (" << to_string(config.scenario.mode) << ")\n";
            print_table(out, rows);
            for (const auto& w : r.warnings()) out << "warning: " << w << '\n';
            break;
        }
    }
    return kExitOk;
}

int run_sweep(const RunConfig& config, const CurveTable* curves, std::ostream& out) {
    const auto series = sweep(config.model, config.scenario, config.d_min, config.d_max, config.steps, curves,
                              {config.spacing, config.threads});
    switch (config.output) {
        case OutputFormat::csv:
            out << kSeriesHeader << '\n';
            for (const auto& p : series) out << csv_record(config, p.distance, p.result.total_db()) << '\n';
            break;
        case OutputFormat::json: {
            ordered_json points = ordered_json::array();
            for (const auto& p : series) {
                ordered_json point = {{"distance_m", p.distance.value()}};
                point.update(result_json(p.result));
                points.push_back(point);
            }
            ordered_json doc = {{"model", to_string(config.model)},
                                {"environment", to_string(config.scenario.environment)},
                                {"mode", to_string(config.scenario.mode)},
                                {"inputs", inputs_json(config)},
                                {"points", points}};
            out << doc.dump(2) << '\n';
            break;
        }
        case OutputFormat::table: {
            std::vector<std::vector<std::string>> rows{{"distance_m", "path_loss_db"}};
            for (const auto& p : series) rows.push_back({f2(p.distance.value()), f2(p.result.total_db())});
            print_table(out, rows);
            break;
        }
    }
    return kExitOk;
}

std::string summary_line(const DiscrepancyLedger& ledger) {
    return "matched " + std::to_string(ledger.matches()) + "/" + std::to_string(ledger.entries.size()) +
           " within " + format_shortest(ledger.tolerance_db) + " dB";
}

std::string opt_f2(const std::optional<double>& v) { return v ? f2(*v) : std::string{}; }

int run_compare(const RunConfig& config, const CurveTable* curves, std::ostream& out) {
    const DiscrepancyLedger ledger = compare_against_reference(
        table3_reference(), {config.tolerance_db, config.scenario.mode, config.threads}, curves);
    switch (config.output) {
        case OutputFormat::csv:
            out << "model,freq_mhz,dist_km,bs_m,rx_m,environment,printed_db,computed_db,delta_db,verdict,mode,notes\n";
            for (const auto& e : ledger.entries) {
                out << to_string(e.row.model) << ',' << f2(e.row.frequency.value()) << ',' << f2(e.row.distance_km)
                    << ',' << f2(e.row.bs_height.value()) << ',' << f2(e.row.rx_height.value()) << ','
                    << to_string(e.environment) << ',' << f2(e.printed_db) << ',' << opt_f2(e.computed_db) << ','
                    << opt_f2(e.delta_db) << ',' << to_string(e.verdict) << ',' << to_string(e.mode) << ','
                    << csv_field(e.notes) << '\n';
            }
            out << summary_line(ledger) << '\n';
            break;
        case OutputFormat::json: {
            ordered_json entries = ordered_json::array();
            for (const auto& e : ledger.entries) {
                entries.push_back({{"model", to_string(e.row.model)},
                                   {"freq_mhz", e.row.frequency.value()},
                                   {"dist_km", e.row.distance_km},
                                   {"bs_m", e.row.bs_height.value()},
                                   {"rx_m", e.row.rx_height.value()},
                                   {"environment", to_string(e.environment)},
                                   {"printed_db", e.printed_db},
                                   {"computed_db", e.computed_db ? ordered_json(*e.computed_db) : ordered_json()},
                                   {"delta_db", e.delta_db ? ordered_json(*e.delta_db) : ordered_json()},
                                   {"verdict", to_string(e.verdict)},
                                   {"mode", to_string(e.mode)},
                                   {"notes", e.notes}});
            }
            ordered_json doc = {{"tolerance_db", ledger.tolerance_db},
                                {"mode", to_string(config.scenario.mode)},
                                {"matched", ledger.matches()},
                                {"total", ledger.entries.size()},
                                {"summary", summary_line(ledger)},
                                {"entries", entries}};
            out << doc.dump(2) << '\n';
            break;
        }
        case OutputFormat::table: {
            std::vector<std::vector<std::string>> rows{
                {"model", "freq_mhz", "bs_m", "environment", "printed_db", "computed_db", "delta_db", "verdict"}};
            for (const auto& e : ledger.entries) {
                rows.push_back({std::string(to_string(e.row.model)), f2(e.row.frequency.value()),
                                f2(e.row.bs_height.value()), std::string(to_string(e.environment)), f2(e.printed_db),
                                opt_f2(e.computed_db), opt_f2(e.delta_db), std::string(to_string(e.verdict))});
            }
            print_table(out, rows);
            out << summary_line(ledger) << '\n';
            break;
        }
    }
    if (config.strict && ledger.matches() != ledger.entries.size()) return kExitStrictMismatch;
    return kExitOk;
}

int run_cell_range(const RunConfig& config, const CurveTable* curves, std::ostream& out) {
    const Meters range =
        invert_cell_range(config.model, config.scenario, config.max_loss_db, config.d_min, config.d_max, curves);
    const Scenario& s = config.scenario;
    switch (config.output) {
        case OutputFormat::csv:
            out << "model,environment,freq_mhz,bs_m,rx_m,mode,max_loss_db,cell_range_m\n"
                << to_string(config.model) << ',' << to_string(s.environment) << ',' << f2(s.link.frequency.value())
                << ',' << f2(s.link.bs_height.value()) << ',' << f2(s.link.rx_height.value()) << ','
                << to_string(s.mode) << ',' << f2(config.max_loss_db) << ',' << f2(range.value()) << '\n';
            break;
        case OutputFormat::json: {
            ordered_json doc = {{"model", to_string(config.model)},
                                {"environment", to_string(s.environment)},
                                {"mode", to_string(s.mode)},
                                {"inputs", inputs_json(config)},
                                {"max_loss_db", config.max_loss_db},
                                {"cell_range_m", range.value()}};
            doc["inputs"].erase("distance_m");
            out << doc.dump(2) << '\n';
            break;
        }
        case OutputFormat::table:
            out << "cell range: " << f2(range.value()) << " m\n";
            break;
    }
    return kExitOk;
}

}  // namespace

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
    try {
        std::unique_ptr<CurveTable> storage;
        const CurveTable* curves = maybe_curves(config, storage);
        switch (config.command) {
            case Command::pathloss: return run_pathloss(config, curves, out, err);
            case Command::sweep: return run_sweep(config, curves, out);
            case Command::compare: return run_compare(config, curves, out);
            case Command::cell_range: return run_cell_range(config, curves, out);
        }
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kExitEvaluation;
    }
    return kExitOk;
}

int main_entry(std::span<const std::string> args, std::ostream& out, std::ostream& err,
               const std::optional<std::string>& curves_env) {
    RunConfig config;
    try {
        config = parse_args(args, curves_env);
    } catch (const HelpRequested& help) {
        out << help.text();
        return kExitOk;
    } catch (const UsageError& e) {
        err << "usage error: " << e.what() << "\nRun with --help for usage.\n";
        return kExitUsage;
    }
    return run(config, out, err);
}

}  // namespace pathcast::cli
