#include "ucc/references.hpp"

#include <cmath>
#include <vector>

#include "ucc/errors.hpp"
#include "ucc/rng.hpp"

namespace ucc {

namespace {

Dataset with_bands(const Dataset& ds, std::vector<double> z, std::string name) {
    auto zl = z;
    return from_columns({ds.y().begin(), ds.y().end()}, {ds.y_hat().begin(), ds.y_hat().end()},
                        std::move(zl), std::move(z), std::move(name));
}

}  // namespace

Dataset constant_band(const Dataset& ds) {
    return with_bands(ds, std::vector<double>(ds.size(), 1.0), "constant");
}

Dataset random_band(const Dataset& ds, std::uint64_t seed) {
    const double sigma = population_std(ds.y_hat());
    if (sigma == 0.0) {
        throw Error(ErrorCode::ZeroVariance,
                    "ZeroVariance: y_hat has zero standard deviation; "
                    "random bands have no scale to draw from");
    }
    auto eng = rng::substream(seed, 0x72616e64ull);  // tag: "rand"
    std::vector<double> z(ds.size());
    for (auto& v : z) v = rng::uniform(eng, sigma / 3.0, 3.0 * sigma);
    return with_bands(ds, std::move(z), "random");
}

Dataset epsilon_perfect_band(const Dataset& ds, double epsilon, std::uint64_t seed) {
    if (!(epsilon > 0.0) || !std::isfinite(epsilon)) {
        throw Error(ErrorCode::InvalidRange, "InvalidRange: epsilon must be positive");
    }
    auto eng = rng::substream(seed, 0x65707366ull);  // tag: "epsf"
    std::vector<double> z(ds.size());
    const auto err = ds.error();
    for (std::size_t i = 0; i < z.size(); ++i) {
        const double u = epsilon * (1.0 - rng::unit53(eng));  // (0, epsilon]
        z[i] = std::abs(err[i]) + u;
    }
    return with_bands(ds, std::move(z), "eps_perfect");
}

Dataset make_reference(const Dataset& ds, const ReferenceSpec& spec) {
    switch (spec.kind) {
        case ReferenceKind::constant: return constant_band(ds);
        case ReferenceKind::random: return random_band(ds, spec.seed);
        case ReferenceKind::epsilon_perfect:
            return epsilon_perfect_band(ds, spec.epsilon, spec.seed);
    }
    throw Error(ErrorCode::InvalidRange, "InvalidRange: unknown reference kind");
}

}  // namespace ucc
