#include "pathcast/path_loss_result.hpp"

#include <algorithm>
#include <stdexcept>

namespace pathcast {

PathLossResult& PathLossResult::add(std::string label, double value_db) {
    if (has_component(label)) {
        throw std::invalid_argument("duplicate path-loss component '" + label + "'");
    }
    total_db_ += value_db;
    components_.push_back({std::move(label), value_db});
    return *this;
}

PathLossResult& PathLossResult::warn(std::string note) {
    warnings_.push_back(std::move(note));
    return *this;
}

PathLossResult& PathLossResult::warn_all(std::span<const std::string> notes) {
    warnings_.insert(warnings_.end(), notes.begin(), notes.end());
    return *this;
}

bool PathLossResult::has_component(std::string_view label) const {
    return std::any_of(components_.begin(), components_.end(),
                       [&](const Component& c) { return c.label == label; });
}

double PathLossResult::component(std::string_view label) const {
    for (const auto& c : components_) {
        if (c.label == label) return c.value_db;
    }
    throw std::out_of_range("no path-loss component '" + std::string(label) + "'");
}

}  // namespace pathcast
