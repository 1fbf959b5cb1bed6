#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace pathcast {

struct Component {
    std::string label;
    double value_db = 0.0;

    bool operator==(const Component&) const = default;
};

/// Total loss with an itemized breakdown. The total is always the running sum
/// of the components in insertion order, so additivity holds exactly.
class PathLossResult {
public:
    /// Throws std::invalid_argument on a duplicate label.
    PathLossResult& add(std::string label, double value_db);
    PathLossResult& warn(std::string note);
    PathLossResult& warn_all(std::span<const std::string> notes);

    [[nodiscard]] double total_db() const { return total_db_; }
    [[nodiscard]] const std::vector<Component>& components() const { return components_; }
    [[nodiscard]] const std::vector<std::string>& warnings() const { return warnings_; }

    /// Value of the component with this label; throws std::out_of_range if absent.
    [[nodiscard]] double component(std::string_view label) const;
    [[nodiscard]] bool has_component(std::string_view label) const;

    bool operator==(const PathLossResult&) const = default;

private:
    double total_db_ = 0.0;
    std::vector<Component> components_;
    std::vector<std::string> warnings_;
};

}  // namespace pathcast
