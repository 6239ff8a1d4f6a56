#pragma once

#include <stdexcept>
#include <string>

namespace rootpoly {

// Malformed input document (CLI exit code 2).
struct ParseError : std::runtime_error {
    explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

// Precondition violated by otherwise well-formed data (CLI exit code 3).
struct DomainError : std::runtime_error {
    explicit DomainError(const std::string& what) : std::runtime_error(what) {}
};

// A checked internal invariant failed; always a bug (CLI exit code 4).
struct InternalError : std::logic_error {
    explicit InternalError(const std::string& what) : std::logic_error(what) {}
};

inline void internal_check(bool ok, const std::string& what) {
    if (!ok) throw InternalError(what);
}

} // namespace rootpoly
