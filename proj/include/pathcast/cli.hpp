#pragma once

#include <cstddef>
#include <optional>
#include <ostream>
#include <span>
#include <stdexcept>
#include <string>

#include "pathcast/scenario_engine.hpp"

namespace pathcast::cli {

enum class Command { pathloss, sweep, compare, cell_range };
enum class OutputFormat { csv, json, table };

inline constexpr int kExitOk = 0;
inline constexpr int kExitEvaluation = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitStrictMismatch = 3;

struct RunConfig {
    Command command = Command::pathloss;
    ModelId model = ModelId::sui;
    Scenario scenario = default_scenario(Environment::urban);
    OutputFormat output = OutputFormat::csv;
    std::optional<std::string> curve_file;
    double tolerance_db = 0.5;
    bool strict = false;
    // sweep / cell-range
    Meters d_min{1000.0};
    Meters d_max{10000.0};
    std::size_t steps = 50;
    Spacing spacing = Spacing::logarithmic;
    unsigned threads = 1;
    double max_loss_db = 0.0;
};

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Thrown by parse_args for --help; carries the rendered help text.
class HelpRequested : public std::runtime_error {
public:
    explicit HelpRequested(std::string text) : std::runtime_error("help requested"), text_(std::move(text)) {}
    [[nodiscard]] const std::string& text() const { return text_; }

private:
    std::string text_;
};

/// `args` excludes the program name. Precedence: flags, then the --config
/// JSON file, then the simulation defaults. `curves_env` is the fallback
/// curve path (PATHCAST_CURVES). Throws UsageError or HelpRequested.
RunConfig parse_args(std::span<const std::string> args,
                     const std::optional<std::string>& curves_env = std::nullopt);

/// Executes a parsed config; returns the process exit code.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

/// parse_args + run with exit-code mapping, as used by the executable.
int main_entry(std::span<const std::string> args, std::ostream& out, std::ostream& err,
               const std::optional<std::string>& curves_env = std::nullopt);

}  // namespace pathcast::cli
