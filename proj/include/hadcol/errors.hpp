#pragma once

#include <stdexcept>
#include <string>

namespace hadcol {

// Bad parameters, malformed files, range violations. Maps to CLI exit code 2.
struct InputError : std::runtime_error {
    explicit InputError(const std::string& what) : std::runtime_error(what) {}
};

// Work refused because an enumeration/size cap would be exceeded (the message
// carries the cost estimate), or because a mode precondition rules the
// computation out. Maps to CLI exit code 3.
struct CapError : std::runtime_error {
    explicit CapError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace hadcol
