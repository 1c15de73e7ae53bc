#pragma once

#include <cstdint>

#include "ucc/curve.hpp"
#include "ucc/dataset.hpp"

namespace ucc {

struct PermutationResult {
    double delta_auucc;    // AUUCC(a) - AUUCC(b), signed
    double p_value;        // two-sided, add-one estimate
    int n_permutations;
    std::uint64_t seed;
};

/// Paired permutation test of |AUUCC(a) - AUUCC(b)| on the given axes.
/// Both datasets must carry identical (y, y_hat) record for record; only the
/// bands may differ (MismatchedBase otherwise).  Each permutation swaps the
/// band pair of every record independently with probability 1/2 and rebuilds
/// both curves; p = (1 + #{|delta_perm| >= |delta_obs|}) / (n_perm + 1).
/// Permutation `i` draws from an independent substream of `seed`, so results
/// do not depend on evaluation order and are reproducible bit for bit.
PermutationResult paired_permutation_test(const Dataset& a, const Dataset& b, AxisPair axes,
                                          int n_perm, std::uint64_t seed);

}  // namespace ucc
