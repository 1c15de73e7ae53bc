#include "ucc/metrics.hpp"

#include <cassert>
#include <cmath>

#include "ucc/errors.hpp"
#include "ucc/kernels.hpp"

namespace ucc {

namespace {

kernels::IntervalSums sums_for(const ScaledView& view) {
    const Dataset& ds = *view.base;
    return kernels::interval_sums(ds.error().data(), ds.z_lower().data(),
                                  ds.z_upper().data(), ds.size(), view.k);
}

}  // namespace

ScaledView at_scale(const Dataset& ds, double k) {
    assert(k >= 0.0 && std::isfinite(k));
    return {&ds, k};
}

ScaledMetrics scaled_metrics(const ScaledView& view) {
    const double n = static_cast<double>(view.base->size());
    const auto s = sums_for(view);
    return {static_cast<double>(s.misses) / n, view.k * view.base->half_width_mean(),
            s.excess / n, s.deficit / n};
}

double miss_rate(const ScaledView& view) {
    const auto s = sums_for(view);
    return static_cast<double>(s.misses) / static_cast<double>(view.base->size());
}

double bandwidth(const ScaledView& view) {
    return view.k * view.base->half_width_mean();
}

double excess(const ScaledView& view) {
    return sums_for(view).excess / static_cast<double>(view.base->size());
}

double deficit(const ScaledView& view) {
    return sums_for(view).deficit / static_cast<double>(view.base->size());
}

double mae_at_scale(const Dataset& ds, double k) {
    if (!ds.symmetric_bands()) {
        throw Error(ErrorCode::AsymmetricBands,
                    "AsymmetricBands: mae_at_scale requires z_lower == z_upper");
    }
    double sum = 0.0;
    const auto err = ds.error();
    const auto z = ds.z_upper();
    for (std::size_t i = 0; i < ds.size(); ++i) {
        sum += std::abs(std::abs(err[i]) - k * z[i]);
    }
    return sum / static_cast<double>(ds.size());
}

double interval_score(const ScaledView& view, double alpha) {
    assert(alpha > 0.0 && alpha <= 1.0);
    const Dataset& ds = *view.base;
    const double k = view.k;
    const auto err = ds.error();
    const auto zl = ds.z_lower();
    const auto zu = ds.z_upper();
    double sum = 0.0;
    for (std::size_t i = 0; i < ds.size(); ++i) {
        // Bounds relative to y_hat: width and shortfalls depend only on the
        // signed error, not on the absolute position of the interval.
        const double width = k * zl[i] + k * zu[i];
        const double below = std::max(-(err[i] + k * zl[i]), 0.0);  // y under lower bound
        const double above = std::max(err[i] - k * zu[i], 0.0);     // y over upper bound
        sum += width + (2.0 / alpha) * (below + above);
    }
    return sum / static_cast<double>(ds.size());
}

}  // namespace ucc
