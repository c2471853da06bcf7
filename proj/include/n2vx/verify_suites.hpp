#pragma once

#include <string>
#include <vector>

namespace n2vx {

struct SuiteCheck {
    std::string name;
    bool passed;
};

/// Graded antisymmetry and Jacobi sweeps for the N=2 and affine sl2
/// brackets. The mode pools hold every L, T, e, h, f mode of index
/// magnitude <= max_index, every G mode of half odd index below that
/// bound, and the central elements; each identity is checked over the
/// full pool and reported as one aggregated entry carrying the pair or
/// triple count in its name.
std::vector<SuiteCheck> jacobi_suite(long max_index = 3);

}  // namespace n2vx
