#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace regfactor {

/// Precondition violated by the caller (unknown vertex, overlapping sets,
/// parameters outside the supported range, ...).
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Malformed input text. `line()` is 1-based, 0 when not line oriented.
class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t line, const std::string& what)
        : std::runtime_error(line ? "line " + std::to_string(line) + ": " + what : what),
          line_(line) {}

    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

/// An exponential routine was asked to run past its configured size cap.
class SizeCapError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A generator could not realize the requested parameters.
class ConstructionError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace regfactor
