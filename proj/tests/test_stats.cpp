#include <cmath>

#include <doctest.h>

#include "helpers.hpp"
#include "ucc/errors.hpp"
#include "ucc/references.hpp"
#include "ucc/stats.hpp"
#include "ucc/synthetic.hpp"

using namespace ucc;

namespace {
constexpr AxisPair kBmr{XMetric::bandwidth, YMetric::miss_rate};
}

TEST_CASE("identical band sets are maximally insignificant") {
    const auto ds = testing::t1();
    const auto r = paired_permutation_test(ds, ds, kBmr, 99, 0);
    CHECK(r.delta_auucc == 0.0);
    CHECK(r.p_value == 1.0);
    CHECK(r.n_permutations == 99);
}

TEST_CASE("permutation test is deterministic in the seed and symmetric in its arguments") {
    std::mt19937_64 eng(51);
    const auto base = testing::random_dataset(eng, {.min_n = 60, .max_n = 60});
    const auto a = random_band(base, 1);
    const auto b = random_band(base, 2);

    const auto r1 = paired_permutation_test(a, b, kBmr, 199, 7);
    const auto r2 = paired_permutation_test(a, b, kBmr, 199, 7);
    CHECK(r1.p_value == r2.p_value);
    CHECK(r1.delta_auucc == r2.delta_auucc);

    const auto flipped = paired_permutation_test(b, a, kBmr, 199, 7);
    CHECK(flipped.p_value == r1.p_value);
    CHECK(flipped.delta_auucc == -r1.delta_auucc);
}

TEST_CASE("mismatched bases and bad permutation counts are rejected") {
    const auto ds = testing::t1();
    auto other = ds.records();
    other[2].y_hat += 0.25;
    const auto shifted = validate(other);

    CHECK_THROWS_AS(paired_permutation_test(ds, shifted, kBmr, 99, 0), Error);
    try {
        paired_permutation_test(ds, shifted, kBmr, 99, 0);
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::MismatchedBase);
    }

    const auto longer = validate({{1, 0, 1, 1}, {2, 0, 1, 1}, {0, 0, 1, 1}, {0, 0, 2, 2}, {1, 0, 1, 1}});
    CHECK_THROWS_AS(paired_permutation_test(ds, longer, kBmr, 99, 0), Error);

    try {
        paired_permutation_test(ds, ds, kBmr, 0, 0);
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::InvalidRange);
    }
}

TEST_CASE("genuinely better bands reach the resolution floor") {
    const auto base = gen_heteroskedastic(hetero_spec(120, 5));
    const auto eps = epsilon_perfect_band(base, 0.05, 5);
    const auto rnd = random_band(base, 5);
    const auto r = paired_permutation_test(eps, rnd, kBmr, 199, 11);
    CHECK(r.p_value == 1.0 / 200.0);
    CHECK(r.delta_auucc < 0.0);  // the near-oracle area is smaller
}

TEST_CASE("null distribution is calibrated") {
    // exchangeable bands: both sides are random draws over the same predictions
    int significant = 0;
    const int runs = 40;
    for (int i = 0; i < runs; ++i) {
        std::mt19937_64 eng(1000 + i);
        const auto base = testing::random_dataset(eng, {.min_n = 60, .max_n = 60});
        const auto a = random_band(base, 10000 + static_cast<std::uint64_t>(i));
        const auto b = random_band(base, 20000 + static_cast<std::uint64_t>(i));
        const auto r = paired_permutation_test(a, b, kBmr, 99, static_cast<std::uint64_t>(i));
        if (r.p_value <= 0.05) ++significant;
    }
    // expected 2 of 40; allowing 7 keeps the false-alarm chance ~1e-3
    CHECK(significant <= 7);
}

TEST_CASE("homoskedastic oracle bands are indistinguishable from constant bands") {
    int above = 0;
    const int runs = 20;
    for (int i = 0; i < runs; ++i) {
        auto spec = hetero_spec(100, static_cast<std::uint64_t>(i));
        spec.noise_lo = spec.noise_hi = 1.3;  // flat noise: oracle = scaled constant
        const auto oracle = gen_heteroskedastic(spec);
        const auto ref = constant_band(oracle);
        const auto r =
            paired_permutation_test(oracle, ref, kBmr, 99, static_cast<std::uint64_t>(i));
        if (r.p_value > 0.05) ++above;
    }
    CHECK(above >= 18);
}
