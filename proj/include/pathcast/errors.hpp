#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace pathcast {

/// Input lies outside the mathematical domain of a formula.
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Input lies outside tabulated data or a requested bracket.
class RangeError : public std::out_of_range {
public:
    using std::out_of_range::out_of_range;
};

/// A keyed lookup (environment row, model name) found nothing.
class LookupError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class PreconditionError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t line, const std::string& what)
        : std::runtime_error(line == 0 ? what : "line " + std::to_string(line) + ": " + what),
          line_(line) {}

    /// 1-based; 0 when the error is not tied to a single line.
    [[nodiscard]] std::size_t line() const { return line_; }

private:
    std::size_t line_;
};

}  // namespace pathcast
