#pragma once

#include <stdexcept>
#include <string>

namespace mstte {

/// Thrown when a structural property the library promises to uphold is
/// found broken at runtime. The property name is machine-readable so the
/// CLI can report which check tripped (exit code 3).
struct InvariantViolation : std::logic_error {
    std::string property;

    InvariantViolation(std::string prop, const std::string& detail)
        : std::logic_error("invariant '" + prop + "' violated" +
                           (detail.empty() ? "" : ": " + detail)),
          property(std::move(prop)) {}
};

inline void invariant(bool ok, const std::string& property,
                      const std::string& detail = "") {
    if (!ok) throw InvariantViolation(property, detail);
}

/// Parse failure in any of the line-oriented text formats. Lines are
/// 1-based; line 0 means the error is not tied to a specific line.
struct ParseError : std::runtime_error {
    int line;

    ParseError(int line_no, const std::string& what)
        : std::runtime_error(line_no > 0
                                 ? "line " + std::to_string(line_no) + ": " + what
                                 : what),
          line(line_no) {}
};

}  // namespace mstte
