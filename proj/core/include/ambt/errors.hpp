#pragma once

#include <stdexcept>
#include <string>

namespace ambt {

/// A guarantee the library relies on was violated; indicates a bug rather
/// than bad input.
class InternalError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/// An exact oracle was asked to solve an instance above its configured size.
class LimitExceeded : public std::length_error {
public:
    using std::length_error::length_error;
};

/// Malformed text input; line() is 1-based, 0 when not tied to a line.
class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t line, const std::string& what)
        : std::runtime_error(line ? "line " + std::to_string(line) + ": " + what : what), line_(line) {}

    std::size_t line() const { return line_; }

private:
    std::size_t line_;
};

}  // namespace ambt
