#pragma once

#include <stdexcept>
#include <string>

namespace kummerlab {

// Thrown when an internal consistency check fails. Carries the name of the
// failing check; the CLI maps it to exit code 2 (invalid input maps to 1).
struct invariant_error : std::logic_error {
    explicit invariant_error(const std::string& check)
        : std::logic_error("invariant violated: " + check) {}
};

inline void require_invariant(bool ok, const char* check) {
    if (!ok) throw invariant_error(check);
}

} // namespace kummerlab
