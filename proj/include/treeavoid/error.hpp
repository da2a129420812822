#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace treeavoid {

// Base class for all library errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Malformed textual input; `position` is the byte offset the parser stopped at.
struct ParseError : Error {
    ParseError(const std::string& message, std::size_t position)
        : Error(message + " (at offset " + std::to_string(position) + ")"),
          position(position) {}

    std::size_t position;
};

// Semantically invalid input: unknown letters, arity mismatches, out-of-range
// indices, violated operation preconditions.
struct InputError : Error {
    using Error::Error;
};

// A configured resource cap was exceeded.  Caps fail loudly; nothing is ever
// silently truncated.
struct CapError : Error {
    using Error::Error;
};

}  // namespace treeavoid
