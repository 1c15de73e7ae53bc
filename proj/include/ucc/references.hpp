#pragma once

#include <cstdint>

#include "ucc/dataset.hpp"

namespace ucc {

enum class ReferenceKind { constant, random, epsilon_perfect };

struct ReferenceSpec {
    ReferenceKind kind = ReferenceKind::constant;
    double epsilon = 0.05;      // epsilon_perfect only
    std::uint64_t seed = 0;     // random and epsilon_perfect
};

/// Same predictions, unit bands.  The scale sweep makes every constant-width
/// band family trace the same curve, so the width 1 is not a tuning choice.
Dataset constant_band(const Dataset& ds);

/// Symmetric bands drawn i.i.d. uniform on [sigma/3, 3*sigma], sigma the
/// population std of y_hat — uninformative but plausibly scaled widths.
/// Throws ZeroVariance when predictions are constant.
Dataset random_band(const Dataset& ds, std::uint64_t seed);

/// Symmetric bands |y - y_hat| + u with u uniform on (0, epsilon]: captures
/// every record at k = 1 with arbitrarily small slack.  The jitter keeps the
/// band strictly positive so no critical scale degenerates to infinity.
Dataset epsilon_perfect_band(const Dataset& ds, double epsilon, std::uint64_t seed);

Dataset make_reference(const Dataset& ds, const ReferenceSpec& spec);

}  // namespace ucc
