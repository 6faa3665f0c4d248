#pragma once

#include <stdexcept>
#include <string>

namespace domcensus {

struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Incompatible matrix shapes, out-of-range indices, malformed patterns.
struct DimensionError : Error {
    explicit DimensionError(const std::string& what) : Error(what) {}
};

// Bad board text, bad JSON, bad CLI input.
struct ParseError : Error {
    explicit ParseError(const std::string& what) : Error(what) {}
};

// Request exceeds a configured size cap (bar length, oracle cell count).
struct LimitError : Error {
    explicit LimitError(const std::string& what) : Error(what) {}
};

}  // namespace domcensus
