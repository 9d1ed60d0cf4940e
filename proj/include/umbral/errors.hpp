#pragma once

#include <stdexcept>
#include <string>

namespace umbral {

// Raised for malformed or out-of-contract caller input (bad JSON, short
// sequences, zero polynomial where a nonzero one is required, ...).
struct InputError : std::runtime_error {
    explicit InputError(const std::string& what) : std::runtime_error(what) {}
};

// Raised when an internally guaranteed identity fails to hold.  Seeing this
// exception means a bug in this library, not in caller code.
struct InternalInconsistency : std::logic_error {
    explicit InternalInconsistency(const std::string& what) : std::logic_error(what) {}
};

} // namespace umbral
