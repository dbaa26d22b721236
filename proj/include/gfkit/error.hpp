#pragma once

#include <stdexcept>
#include <string>

namespace gfkit {

// Base class for everything this library throws.
struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Malformed input text (structure/formula/query/invariant files).
struct ParseError : Error {
    ParseError(const std::string& msg, int line, int col)
        : Error(msg + " (line " + std::to_string(line) + ", column " + std::to_string(col) + ")"),
          line(line), col(col) {}
    int line;
    int col;
};

// A configured ceiling was exceeded (type space, enumeration, oracle budget,
// generation cap).  `estimate` carries the size estimate that tripped it.
struct ResourceError : Error {
    ResourceError(const std::string& msg, const std::string& estimate)
        : Error(msg + " [estimate: " + estimate + "]"), estimate(estimate) {}
    std::string estimate;
};

// Precondition violation on a public operation.
struct DomainError : Error {
    explicit DomainError(const std::string& msg) : Error(msg) {}
};

// Structural corruption: an internal invariant did not hold.  Signals a bug.
struct InternalError : Error {
    explicit InternalError(const std::string& msg) : Error(msg) {}
};

} // namespace gfkit
