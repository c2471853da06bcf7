#pragma once

#include <stdexcept>

namespace n2vx {

/// Thrown when a computation would step outside a configured finite window
/// (dense top-level index range, lattice exponent bound, Heisenberg depth).
/// Windows are hard error boundaries, never silent truncations: a check that
/// needs states beyond the window must be reconfigured, not faked.
struct WindowExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace n2vx
