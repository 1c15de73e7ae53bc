#pragma once

#include "ucc/dataset.hpp"

namespace ucc {

/// A dataset viewed with every band multiplied by a nonnegative finite scale k.
/// Views are cheap; nothing is copied.
struct ScaledView {
    const Dataset* base;
    double k;
};

ScaledView at_scale(const Dataset& ds, double k);

/// All four per-scale metrics from one fused pass over the records.
struct ScaledMetrics {
    double miss_rate;
    double bandwidth;
    double excess;
    double deficit;
};

ScaledMetrics scaled_metrics(const ScaledView& view);

/// Fraction of records whose y falls outside [y_hat - k*z_lower, y_hat + k*z_upper].
/// Boundary hits count as captured.
double miss_rate(const ScaledView& view);

/// Mean half-width of the scaled bands: k * mean((z_lower + z_upper) / 2).
/// Exactly linear in k.
double bandwidth(const ScaledView& view);

/// Mean slack of captured records to their nearer bound (missed records
/// contribute zero); measures how much the bands could tighten.
double excess(const ScaledView& view);

/// Mean shortfall of missed records past their nearer bound (captured records
/// contribute zero); measures how much the bands would need to widen.
double deficit(const ScaledView& view);

/// Mean absolute calibration error (1/N) * sum | |y - y_hat| - k*z |, defined
/// for symmetric bands only (z = z_lower = z_upper).  Throws AsymmetricBands.
double mae_at_scale(const Dataset& ds, double k);

/// Negatively oriented interval score at miss level alpha in (0, 1):
/// mean of (u - l) + (2/alpha) * max(l - y, 0) + (2/alpha) * max(y - u, 0)
/// with l, u the scaled bounds of the view.
double interval_score(const ScaledView& view, double alpha);

}  // namespace ucc
