#include "ucc/stats.hpp"

#include <cmath>
#include <vector>

#include "ucc/errors.hpp"
#include "ucc/rng.hpp"

namespace ucc {

namespace {

double curve_area(const std::vector<double>& y, const std::vector<double>& y_hat,
                  std::vector<double> zl, std::vector<double> zu, AxisPair axes) {
    const Dataset ds = from_columns(y, y_hat, std::move(zl), std::move(zu));
    return auucc(build_ucc(ds, axes));
}

}  // namespace

PermutationResult paired_permutation_test(const Dataset& a, const Dataset& b, AxisPair axes,
                                          int n_perm, std::uint64_t seed) {
    if (n_perm < 1) {
        throw Error(ErrorCode::InvalidRange, "InvalidRange: need at least one permutation");
    }
    const std::size_t n = a.size();
    if (b.size() != n) {
        throw Error(ErrorCode::MismatchedBase, "MismatchedBase: datasets differ in length");
    }
    for (std::size_t i = 0; i < n; ++i) {
        if (a.y()[i] != b.y()[i] || a.y_hat()[i] != b.y_hat()[i]) {
            throw Error(ErrorCode::MismatchedBase,
                        "MismatchedBase: (y, y_hat) differ at record " + std::to_string(i));
        }
    }

    const std::vector<double> y(a.y().begin(), a.y().end());
    const std::vector<double> y_hat(a.y_hat().begin(), a.y_hat().end());

    const double area_a = curve_area(y, y_hat, {a.z_lower().begin(), a.z_lower().end()},
                                     {a.z_upper().begin(), a.z_upper().end()}, axes);
    const double area_b = curve_area(y, y_hat, {b.z_lower().begin(), b.z_lower().end()},
                                     {b.z_upper().begin(), b.z_upper().end()}, axes);
    const double observed = area_a - area_b;
    const double threshold = std::abs(observed);

    std::vector<double> zl_a(n), zu_a(n), zl_b(n), zu_b(n);
    long hits = 0;
    for (int p = 0; p < n_perm; ++p) {
        auto eng = rng::substream(seed, static_cast<std::uint64_t>(p) + 1);
        for (std::size_t i = 0; i < n; ++i) {
            const bool swap = (eng() & 1u) != 0;
            const Dataset& first = swap ? b : a;
            const Dataset& second = swap ? a : b;
            zl_a[i] = first.z_lower()[i];
            zu_a[i] = first.z_upper()[i];
            zl_b[i] = second.z_lower()[i];
            zu_b[i] = second.z_upper()[i];
        }
        const double delta = curve_area(y, y_hat, zl_a, zu_a, axes) -
                             curve_area(y, y_hat, zl_b, zu_b, axes);
        if (std::abs(delta) >= threshold) ++hits;
    }

    PermutationResult out;
    out.delta_auucc = observed;
    out.p_value = static_cast<double>(1 + hits) / static_cast<double>(n_perm + 1);
    out.n_permutations = n_perm;
    out.seed = seed;
    return out;
}

}  // namespace ucc
