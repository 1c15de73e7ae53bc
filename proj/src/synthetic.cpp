#include "ucc/synthetic.hpp"

#include <cmath>
#include <limits>
#include <numbers>

#include "ucc/errors.hpp"
#include "ucc/metrics.hpp"
#include "ucc/rng.hpp"

namespace ucc {

double xsinx(double x) { return x * std::sin(x); }

namespace {

constexpr double kXMax = 20.0;

// Smooth, reproducible stand-in for the bias of a trained regressor.
double standin_bias(double x) {
    return 0.6 * std::sin(2.7 * x + 1.0) + 0.25 * std::sin(9.1 * x);
}

}  // namespace

XsinxData gen_xsinx(const SyntheticSpec& spec) {
    if (spec.n_train < 1 || spec.n_test < 2) {
        throw Error(ErrorCode::InvalidRange, "InvalidRange: need n_train >= 1, n_test >= 2");
    }
    XsinxData data;
    auto x_eng = rng::substream(spec.seed, 1);
    auto noise_eng = rng::substream(spec.seed, 2);
    data.train_x.resize(spec.n_train);
    data.train_y.resize(spec.n_train);
    for (int i = 0; i < spec.n_train; ++i) {
        const double x = rng::uniform(x_eng, 0.0, kXMax);
        const double sigma = rng::uniform(noise_eng, spec.noise_lo, spec.noise_hi);
        data.train_x[i] = x;
        data.train_y[i] = xsinx(x) + sigma * rng::gaussian(noise_eng);
    }
    data.test_x.resize(spec.n_test);
    data.test_y.resize(spec.n_test);
    for (int i = 0; i < spec.n_test; ++i) {
        const double x = kXMax * static_cast<double>(i) / static_cast<double>(spec.n_test - 1);
        data.test_x[i] = x;
        data.test_y[i] = xsinx(x);  // noise-free evaluation targets
    }
    return data;
}

Dataset xsinx_standin(const XsinxData& data, StandinQuality quality, std::uint64_t seed) {
    const std::size_t n = data.test_x.size();
    std::vector<double> y_hat(n), z(n);
    auto eng = rng::substream(seed, 3);
    for (std::size_t i = 0; i < n; ++i) {
        y_hat[i] = xsinx(data.test_x[i]) + standin_bias(data.test_x[i]);
        const double abs_err = std::abs(y_hat[i] - data.test_y[i]);
        if (quality == StandinQuality::tuned) {
            // Tracks the realized error up to noise: informative but imperfect.
            z[i] = 0.8 * (abs_err + rng::uniform(eng, 0.05, 0.55));
        } else {
            // Anti-correlated with the error: confidently wrong where it matters.
            z[i] = 0.9 / (1.0 + abs_err);
        }
    }
    auto zu = z;
    return from_columns(std::vector<double>(data.test_y), std::move(y_hat), std::move(z),
                        std::move(zu), quality == StandinQuality::tuned ? "tuned" : "weak");
}

Dataset gen_heteroskedastic(const SyntheticSpec& spec) {
    if (spec.n_test < 2) {
        throw Error(ErrorCode::InvalidRange, "InvalidRange: need n_test >= 2");
    }
    const int n = spec.n_test;
    auto t_eng = rng::substream(spec.seed, 1);
    auto e_eng = rng::substream(spec.seed, 2);
    std::vector<double> y(n), y_hat(n), z(n);
    for (int i = 0; i < n; ++i) {
        const double t = rng::unit53(t_eng);
        const double f = 3.0 * std::sin(2.0 * std::numbers::pi * t);
        const double sigma = spec.noise_lo + (spec.noise_hi - spec.noise_lo) * t;
        y[i] = f + sigma * rng::gaussian(e_eng);
        y_hat[i] = f;
        z[i] = sigma;
    }
    auto zu = z;
    return from_columns(std::move(y), std::move(y_hat), std::move(z), std::move(zu),
                        "heteroskedastic");
}

double brute_force_auucc(const Dataset& ds, AxisPair axes, std::int64_t grid_size) {
    if (grid_size < 10) {
        throw Error(ErrorCode::InvalidRange, "InvalidRange: grid_size must be at least 10");
    }
    const auto ks = critical_scales(ds);
    double k_max = 0.0;
    bool any_finite = false;
    for (double k : ks.scales) {
        if (!std::isinf(k)) {
            any_finite = true;
            if (k > k_max) k_max = k;
        }
    }
    if (!any_finite) {
        throw Error(ErrorCode::AllScalesInfinite,
                    "AllScalesInfinite: no record is capturable at finite scale");
    }
    if (k_max == 0.0) return 0.0;  // perfect predictions: the curve is one point

    double area = 0.0;
    double prev_x = 0.0;
    double prev_y = 0.0;
    for (std::int64_t t = 0; t <= grid_size; ++t) {
        const double k = k_max * static_cast<double>(t) / static_cast<double>(grid_size);
        const auto m = scaled_metrics(at_scale(ds, k));
        const double x = axes.x == XMetric::bandwidth ? m.bandwidth : m.excess;
        const double y = axes.y == YMetric::miss_rate ? m.miss_rate : m.deficit;
        if (t > 0) area += 0.5 * (y + prev_y) * (x - prev_x);
        prev_x = x;
        prev_y = y;
    }
    return area;
}

}  // namespace ucc
