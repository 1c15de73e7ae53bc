#pragma once

#include <random>
#include <vector>

#include "ucc/dataset.hpp"
#include "ucc/rng.hpp"

namespace ucc::testing {

/// Four-record fixture with one miss at k=1, one zero-error record, and a tie
/// at critical scale 1; every metric on it is known in closed form.
inline Dataset t1() {
    return validate({{1.0, 0.0, 1.0, 1.0},
                     {2.0, 0.0, 1.0, 1.0},
                     {-0.5, 0.0, 0.5, 0.5},
                     {0.0, 0.0, 2.0, 2.0}},
                    "t1");
}

struct RandomDatasetOptions {
    std::size_t min_n = 2;
    std::size_t max_n = 200;
    bool symmetric = false;
    bool allow_zero_bands = false;   // zero band against nonzero error => infinite scale
    bool allow_exact_hits = true;    // occasional y == y_hat records
};

/// Messy-but-valid dataset for property tests.
inline Dataset random_dataset(std::mt19937_64& eng, const RandomDatasetOptions& opt = {}) {
    const std::size_t n =
        opt.min_n + static_cast<std::size_t>(rng::unit53(eng) *
                                             static_cast<double>(opt.max_n - opt.min_n + 1));
    std::vector<PredictionRecord> recs(n);
    for (auto& r : recs) {
        r.y_hat = rng::uniform(eng, -5.0, 5.0);
        r.y = opt.allow_exact_hits && rng::unit53(eng) < 0.05
                  ? r.y_hat
                  : rng::uniform(eng, -5.0, 5.0);
        auto band = [&]() {
            if (opt.allow_zero_bands && rng::unit53(eng) < 0.05) return 0.0;
            return rng::uniform(eng, 0.05, 2.5);
        };
        r.z_lower = band();
        r.z_upper = opt.symmetric ? r.z_lower : band();
    }
    return validate(std::move(recs), "random");
}

}  // namespace ucc::testing
