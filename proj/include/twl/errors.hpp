#ifndef TWL_ERRORS_HPP
#define TWL_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace twl {

// Thrown when two values from different ring instances are combined, or a
// ring spec file is malformed.
struct config_error : std::runtime_error {
    explicit config_error(const std::string& msg) : std::runtime_error(msg) {}
};

// Violated mathematical precondition (zero inverse, non-unit where a unit is
// required, bad index ranges).
struct domain_error : std::runtime_error {
    explicit domain_error(const std::string& msg) : std::runtime_error(msg) {}
};

// Syntax error in a word / scalar / ring literal.
struct parse_error : std::runtime_error {
    explicit parse_error(const std::string& msg) : std::runtime_error(msg) {}
};

// A postcondition that is guaranteed by theory failed to hold; always a bug,
// never silently accepted.
struct internal_error : std::runtime_error {
    explicit internal_error(const std::string& msg) : std::runtime_error(msg) {}
};

} // namespace twl

#endif
