#include <cmath>

#include <doctest.h>

#include "helpers.hpp"
#include "ucc/errors.hpp"
#include "ucc/metrics.hpp"
#include "ucc/references.hpp"
#include "ucc/synthetic.hpp"

using namespace ucc;

namespace {
constexpr AxisPair kBmr{XMetric::bandwidth, YMetric::miss_rate};
constexpr AxisPair kEmr{XMetric::excess, YMetric::miss_rate};
}  // namespace

TEST_CASE("constant bands: unit width over the same predictions") {
    const auto ds = testing::t1();
    const auto ref = constant_band(ds);
    CHECK(ref.size() == ds.size());
    CHECK(base_fingerprint(ref) == base_fingerprint(ds));
    for (std::size_t i = 0; i < ref.size(); ++i) {
        CHECK(ref.record(i).z_lower == 1.0);
        CHECK(ref.record(i).z_upper == 1.0);
    }

    const auto curve = build_ucc(ref, kBmr);
    REQUIRE(curve.points.size() == 4);  // scales 0, 0.5, 1, 2
    CHECK(curve.points[1].k == 0.5);
    CHECK(curve.points[1].x == 0.5);  // unit half-width: x equals k
    CHECK(auucc(curve) == 0.875);

    // applying it twice is a no-op
    const auto again = constant_band(ref);
    for (std::size_t i = 0; i < ref.size(); ++i) CHECK(again.record(i) == ref.record(i));
}

TEST_CASE("random bands: reproducible, symmetric, inside the support") {
    std::mt19937_64 eng(41);
    const auto ds = testing::random_dataset(eng, {.min_n = 50, .max_n = 50});
    const double sigma = population_std(ds.y_hat());

    const auto a = random_band(ds, 7);
    const auto b = random_band(ds, 7);
    const auto c = random_band(ds, 8);
    bool any_diff = false;
    for (std::size_t i = 0; i < a.size(); ++i) {
        CHECK(a.record(i).z_lower == b.record(i).z_lower);  // same seed, same bands
        CHECK(a.record(i).z_lower == a.record(i).z_upper);
        CHECK(a.record(i).z_lower >= sigma / 3.0);
        CHECK(a.record(i).z_lower <= 3.0 * sigma);
        any_diff |= a.record(i).z_lower != c.record(i).z_lower;
    }
    CHECK(any_diff);

    const auto flat = validate({{1.0, 2.0, 1.0, 1.0}, {3.0, 2.0, 1.0, 1.0}});
    CHECK_THROWS_AS(random_band(flat, 0), Error);
}

TEST_CASE("epsilon-perfect bands capture everything at k=1 with tiny slack") {
    std::mt19937_64 eng(42);
    const auto ds = testing::random_dataset(eng, {.min_n = 80, .max_n = 80});
    const double eps = 0.05;
    const auto ref = epsilon_perfect_band(ds, eps, 5);

    for (std::size_t i = 0; i < ref.size(); ++i) {
        const double slack = ref.record(i).z_lower - std::abs(ds.error()[i]);
        CHECK(slack > 0.0);
        CHECK(slack <= eps);
    }
    CHECK(miss_rate(at_scale(ref, 1.0)) == 0.0);
    CHECK(excess(at_scale(ref, 1.0)) <= eps);
    CHECK(auucc(build_ucc(ref, kEmr)) <= eps);

    CHECK_THROWS_AS(epsilon_perfect_band(ds, 0.0, 5), Error);
    CHECK_THROWS_AS(epsilon_perfect_band(ds, -1.0, 5), Error);
}

TEST_CASE("make_reference dispatches on the requested kind") {
    const auto ds = testing::t1();
    CHECK(make_reference(ds, {ReferenceKind::constant, 0, 0}).record(0).z_lower == 1.0);
    const auto eps = make_reference(ds, {ReferenceKind::epsilon_perfect, 0.5, 3});
    CHECK(eps.record(3).z_lower <= 0.5);  // zero error record: band is pure slack
}

TEST_CASE("random bands rank worst among the stand-in band families") {
    for (const std::uint64_t seed : {0ull, 1ull, 2ull}) {
        SyntheticSpec spec;
        spec.kind = SyntheticKind::xsinx;
        spec.n_train = 200;  // train pairs are unused by the stand-ins
        spec.n_test = 1000;
        spec.seed = seed;
        const auto data = gen_xsinx(spec);
        const auto tuned = xsinx_standin(data, StandinQuality::tuned, seed);
        const auto weak = xsinx_standin(data, StandinQuality::weak, seed);

        const double a_tuned = auucc(build_ucc(tuned, kBmr));
        const double a_const = auucc(build_ucc(constant_band(tuned), kBmr));
        const double a_weak = auucc(build_ucc(weak, kBmr));
        const double a_rand = auucc(build_ucc(random_band(tuned, seed), kBmr));

        // informative bands beat the constant, which beats the anti-correlated
        // stand-in, and uninformed random widths come last
        CHECK(a_tuned < a_const);
        CHECK(a_const < a_weak);
        CHECK(a_weak < a_rand);
    }
}
