#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace eo {

// Bad input: malformed files, unmet preconditions, inapplicable methods.
class InputError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class ParseError : public InputError {
public:
    ParseError(std::size_t line, const std::string& what)
        : InputError("line " + std::to_string(line) + ": " + what), line_(line) {}

    std::size_t line() const { return line_; }

private:
    std::size_t line_;
};

// A configured resource cap (edge count, frontier width, rejection attempts,
// MC dimension) would be exceeded.
class ResourceCapError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Internal numerical failure that valid input should never trigger.
class NumericalError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace eo
