#include <algorithm>
#include <fstream>
#include <string>
#include <variant>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "pathcast/cli.hpp"
#include "pathcast/format.hpp"

namespace pathcast::cli {

namespace {

// Everything a user can set, from either carrier. Unset means "inherit".
struct Overrides {
    std::optional<std::string> model, env, mode, output, curves;
    std::optional<double> freq_mhz, bs_m, rx_m, dist_m, dist_km, d0_m;
    std::optional<double> street_width_m, building_sep_m, roof_m, orientation_deg, metro_k;
    std::optional<double> ericsson_a0, ericsson_a1, ericsson_a2, ericsson_a3;
    std::optional<double> shadow_margin_db, tolerance_db, d_min_m, d_max_m, max_loss_db;
    std::optional<unsigned> steps, threads;
    std::optional<bool> allow_custom_k, los, apply_shadow_margin, sui_shadowing, strict, linear;
};

using Field = std::variant<std::optional<std::string> Overrides::*, std::optional<double> Overrides::*,
                           std::optional<unsigned> Overrides::*, std::optional<bool> Overrides::*>;

enum CommandMask : unsigned {
    kPathloss = 1u << 0,
    kSweep = 1u << 1,
    kCompare = 1u << 2,
    kCellRange = 1u << 3,
    kScenario = kPathloss | kSweep | kCellRange,
    kAll = kPathloss | kSweep | kCompare | kCellRange,
};

struct OptionSpec {
    const char* name;  // flag without leading dashes; JSON key is the snake_case form
    Field field;
    unsigned commands;
    const char* default_text;
    const char* help;
};

const std::vector<OptionSpec>& option_specs() {
    static const std::vector<OptionSpec> specs = {
        {"model", &Overrides::model, kScenario, "sui",
         "sui | okumura | cost231_hata | walfisch_ikegami | ericsson9999"},
        {"env", &Overrides::env, kScenario, "urban", "urban | suburban | rural"},
        {"mode", &Overrides::mode, kAll, "corrected", "corrected | as_printed"},
        {"output", &Overrides::output, kAll, "csv", "csv | json | table"},
        {"curves", &Overrides::curves, kAll, "$PATHCAST_CURVES", "Okumura curve CSV file"},
        {"freq-mhz", &Overrides::freq_mhz, kScenario, "1900", "carrier frequency (MHz)"},
        {"bs-m", &Overrides::bs_m, kScenario, "30", "base station antenna height (m)"},
        {"rx-m", &Overrides::rx_m, kScenario, "3", "receiver antenna height (m)"},
        {"dist-m", &Overrides::dist_m, kPathloss, "5000", "Tx-Rx distance (m)"},
        {"dist-km", &Overrides::dist_km, kPathloss, "5", "Tx-Rx distance (km); excludes --dist-m"},
        {"d0-m", &Overrides::d0_m, kScenario, "100", "SUI reference distance (m)"},
        {"street-width-m", &Overrides::street_width_m, kScenario, "25", "W-I street width (m)"},
        {"building-sep-m", &Overrides::building_sep_m, kScenario, "50", "W-I building separation (m)"},
        {"roof-m", &Overrides::roof_m, kScenario, "15", "W-I average roof height (m)"},
        {"orientation-deg", &Overrides::orientation_deg, kScenario, "30 urban / 40 otherwise",
         "W-I street orientation (deg, 0-90)"},
        {"metro-k", &Overrides::metro_k, kScenario, "1.5 urban / 0.7 otherwise",
         "W-I k factor (0.7 or 1.5 unless --allow-custom-k)"},
        {"allow-custom-k", &Overrides::allow_custom_k, kScenario, "false", "accept any --metro-k"},
        {"los", &Overrides::los, kScenario, "false (rural always LOS)", "force W-I line-of-sight formula"},
        {"ericsson-a0", &Overrides::ericsson_a0, kScenario, "36.2", "Ericsson a0"},
        {"ericsson-a1", &Overrides::ericsson_a1, kScenario, "30.2", "Ericsson a1"},
        {"ericsson-a2", &Overrides::ericsson_a2, kScenario, "12", "Ericsson a2"},
        {"ericsson-a3", &Overrides::ericsson_a3, kScenario, "0.1", "Ericsson a3"},
        {"shadow-margin-db", &Overrides::shadow_margin_db, kScenario, "10.6 urban / 8.2 otherwise",
         "shadowing correction (dB), added only with --apply-shadow-margin"},
        {"apply-shadow-margin", &Overrides::apply_shadow_margin, kScenario, "false",
         "add the shadow margin as a component"},
        {"sui-shadowing", &Overrides::sui_shadowing, kScenario, "true",
         "include the SUI shadowing term (--no-sui-shadowing to drop it)"},
        {"tolerance-db", &Overrides::tolerance_db, kCompare, "0.5", "match tolerance (dB)"},
        {"strict", &Overrides::strict, kCompare, "false", "exit 3 on any mismatch"},
        {"d-min-m", &Overrides::d_min_m, kSweep | kCellRange, "1000", "lower distance (m)"},
        {"d-max-m", &Overrides::d_max_m, kSweep | kCellRange, "10000", "upper distance (m)"},
        {"steps", &Overrides::steps, kSweep, "50", "number of sweep points (>= 2)"},
        {"linear", &Overrides::linear, kSweep, "false", "linear instead of log spacing"},
        {"threads", &Overrides::threads, kSweep | kCompare, "1", "worker threads"},
        {"max-loss-db", &Overrides::max_loss_db, kCellRange, "(required)", "maximum allowed path loss (dB)"},
    };
    return specs;
}

std::string json_key(std::string_view flag) {
    std::string key(flag);
    std::replace(key.begin(), key.end(), '-', '_');
    return key;
}

Overrides read_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw UsageError("--config: cannot open '" + path + "'");
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(in);
    } catch (const nlohmann::json::exception& e) {
        throw UsageError("--config: malformed JSON in '" + path + "': " + e.what());
    }
    if (!doc.is_object()) throw UsageError("--config: top level must be an object");

    Overrides out;
    for (const auto& [key, value] : doc.items()) {
        const auto& specs = option_specs();
        auto it = std::find_if(specs.begin(), specs.end(),
                               [&](const OptionSpec& s) { return json_key(s.name) == key; });
        if (it == specs.end()) throw UsageError("--config: unknown key '" + key + "'");
        const std::string where = "--config key '" + key + "'";
        std::visit(
            [&](auto member) {
                using T = typename std::remove_reference_t<decltype(out.*member)>::value_type;
                if constexpr (std::is_same_v<T, std::string>) {
                    if (!value.is_string()) throw UsageError(where + ": expected a string");
                    out.*member = value.template get<std::string>();
                } else if constexpr (std::is_same_v<T, bool>) {
                    if (!value.is_boolean()) throw UsageError(where + ": expected true or false");
                    out.*member = value.template get<bool>();
                } else if constexpr (std::is_same_v<T, unsigned>) {
                    if (!value.is_number_unsigned()) throw UsageError(where + ": expected a non-negative integer");
                    out.*member = value.template get<unsigned>();
                } else {
                    if (!value.is_number()) throw UsageError(where + ": expected a number");
                    out.*member = value.template get<double>();
                }
            },
            it->field);
    }
    return out;
}

void overlay(Overrides& base, const Overrides& top) {
    for (const auto& spec : option_specs()) {
        std::visit(
            [&](auto member) {
                if ((top.*member).has_value()) base.*member = top.*member;
            },
            spec.field);
    }
}

template <typename E>
E choose(const std::optional<std::string>& text, E fallback, std::optional<E> (*parse)(std::string_view),
         const char* flag) {
    if (!text) return fallback;
    if (auto v = parse(*text)) return *v;
    throw UsageError(std::string("--") + flag + ": invalid value '" + *text + "'");
}

std::optional<OutputFormat> parse_output(std::string_view s) {
    if (s == "csv") return OutputFormat::csv;
    if (s == "json") return OutputFormat::json;
    if (s == "table") return OutputFormat::table;
    return std::nullopt;
}

RunConfig resolve(Command command, const Overrides& o) {
    RunConfig config;
    config.command = command;
    config.model = choose(o.model, ModelId::sui, &parse_model_id, "model");
    const Environment env = choose(o.env, Environment::urban, &parse_environment, "env");
    config.output = choose(o.output, OutputFormat::csv, &parse_output, "output");

    Scenario& s = config.scenario;
    s = default_scenario(env, Meters{o.bs_m.value_or(30.0)}, Megahertz{o.freq_mhz.value_or(1900.0)});
    s.mode = choose(o.mode, FidelityMode::corrected, &parse_fidelity_mode, "mode");
    if (o.dist_m && o.dist_km) throw UsageError("--dist-m and --dist-km: conflicting units, give one");
    if (o.dist_m) s.link.distance = Meters{*o.dist_m};
    if (o.dist_km) s.link.distance = from_km(*o.dist_km);
    if (o.rx_m) s.link.rx_height = Meters{*o.rx_m};
    if (o.d0_m) s.link.sui_reference_distance = Meters{*o.d0_m};
    if (o.street_width_m) s.wi_geometry.street_width = Meters{*o.street_width_m};
    if (o.building_sep_m) s.wi_geometry.building_separation = Meters{*o.building_sep_m};
    if (o.roof_m) s.wi_geometry.roof_height = Meters{*o.roof_m};
    if (o.orientation_deg) s.wi_geometry.orientation = Degrees{*o.orientation_deg};
    if (o.metro_k) s.wi_geometry.metro_factor_k = *o.metro_k;
    s.wi_geometry.allow_custom_k = o.allow_custom_k.value_or(false);
    s.wi_geometry.los = o.los.value_or(false);
    if (o.ericsson_a0) s.ericsson.a0 = *o.ericsson_a0;
    if (o.ericsson_a1) s.ericsson.a1 = *o.ericsson_a1;
    if (o.ericsson_a2) s.ericsson.a2 = *o.ericsson_a2;
    if (o.ericsson_a3) s.ericsson.a3 = *o.ericsson_a3;
    if (o.shadow_margin_db) s.shadow_margin_db = *o.shadow_margin_db;
    s.apply_shadow_margin = o.apply_shadow_margin.value_or(false);
    s.include_sui_shadowing = o.sui_shadowing.value_or(true);

    config.curve_file = o.curves;
    config.tolerance_db = o.tolerance_db.value_or(0.5);
    if (!(config.tolerance_db > 0.0)) throw UsageError("--tolerance-db: must be positive");
    config.strict = o.strict.value_or(false);
    config.d_min = Meters{o.d_min_m.value_or(1000.0)};
    config.d_max = Meters{o.d_max_m.value_or(10000.0)};
    config.steps = o.steps.value_or(50);
    if (command == Command::sweep && config.steps < 2) throw UsageError("--steps: must be at least 2");
    config.spacing = o.linear.value_or(false) ? Spacing::linear : Spacing::logarithmic;
    config.threads = std::max(1u, o.threads.value_or(1));
    if (command == Command::cell_range) {
        if (!o.max_loss_db) throw UsageError("cell-range: --max-loss-db is required");
        config.max_loss_db = *o.max_loss_db;
    }
    return config;
}

}  // namespace

RunConfig parse_args(std::span<const std::string> args, const std::optional<std::string>& curves_env) {
    CLI::App app{"Empirical radio path-loss engine: SUI, Okumura, COST-231 Hata, "
                 "COST-231 Walfisch-Ikegami and Ericsson 9999 models.",
                 "pathcast"};
    app.require_subcommand(1);
    app.fallthrough();
    app.set_help_all_flag("--help-all", "help for every subcommand");

    Overrides flags;
    std::optional<std::string> config_path;
    app.add_option("--config", config_path, "JSON file with snake_case keys for any flag");

    CLI::App* pathloss = app.add_subcommand("pathloss", "evaluate one model at one distance");
    CLI::App* sweep_cmd = app.add_subcommand("sweep", "evaluate one model over a distance range");
    CLI::App* compare = app.add_subcommand("compare", "compare every model against the embedded reference table");
    CLI::App* cell_range = app.add_subcommand("cell-range", "largest distance whose loss stays within --max-loss-db");
    const std::pair<unsigned, CLI::App*> targets[] = {
        {kPathloss, pathloss}, {kSweep, sweep_cmd}, {kCompare, compare}, {kCellRange, cell_range}};

    for (const auto& spec : option_specs()) {
        const std::string flag = std::string("--") + spec.name;
        for (const auto& [mask, sub] : targets) {
            if ((spec.commands & mask) == 0) continue;
            std::visit(
                [&](auto member) {
                    using T = typename std::remove_reference_t<decltype(flags.*member)>::value_type;
                    CLI::Option* opt = nullptr;
                    if constexpr (std::is_same_v<T, bool>) {
                        const std::string names = spec.name == std::string_view("sui-shadowing")
                                                      ? flag + ",!--no-sui-shadowing"
                                                      : flag;
                        opt = sub->add_flag(names, flags.*member, spec.help);
                    } else {
                        opt = sub->add_option(flag, flags.*member, spec.help);
                    }
                    opt->default_str(spec.default_text);
                },
                spec.field);
        }
    }
    pathloss->get_option("--dist-m")->excludes(pathloss->get_option("--dist-km"));

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        throw HelpRequested(app.help());
    } catch (const CLI::CallForAllHelp&) {
        throw HelpRequested(app.help("", CLI::AppFormatMode::All));
    } catch (const CLI::ParseError& e) {
        throw UsageError(e.what());
    }

    Command command = Command::pathloss;
    if (sweep_cmd->parsed()) command = Command::sweep;
    if (compare->parsed()) command = Command::compare;
    if (cell_range->parsed()) command = Command::cell_range;

    Overrides merged;
    if (config_path) merged = read_config(*config_path);
    if (flags.dist_m || flags.dist_km) {
        merged.dist_m.reset();
        merged.dist_km.reset();
    }
    overlay(merged, flags);
    if (!merged.curves && curves_env && !curves_env->empty()) merged.curves = curves_env;
    return resolve(command, merged);
}

}  // namespace pathcast::cli
