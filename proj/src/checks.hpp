#pragma once

#include <cmath>
#include <string>

#include "pathcast/errors.hpp"
#include "pathcast/format.hpp"

namespace pathcast::detail {

inline void require_positive(double v, const char* what) {
    if (!(v > 0.0) || !std::isfinite(v)) {
        throw DomainError(std::string(what) + " must be positive and finite, got " +
                          format_shortest(v));
    }
}

}  // namespace pathcast::detail
