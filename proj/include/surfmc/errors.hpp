#pragma once

#include <stdexcept>

namespace surfmc {

// Request exceeds a documented capability bound (enumeration size,
// neighbor-order range). Maps to CLI exit code 3.
struct CapabilityError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Heat-capacity maximum sits at a grid edge (or the local fit is not
// concave), so no peak position can be extracted.
struct UnbracketedPeakError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace surfmc
