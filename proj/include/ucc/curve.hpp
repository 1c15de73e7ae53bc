#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ucc/dataset.hpp"

namespace ucc {

enum class XMetric { bandwidth, excess };
enum class YMetric { miss_rate, deficit };

/// Axis pair of a curve.  Supported combinations: bandwidth:miss_rate,
/// excess:deficit and excess:miss_rate; anything else throws InvalidAxes.
struct AxisPair {
    XMetric x;
    YMetric y;

    static AxisPair make(XMetric x, YMetric y);
    static AxisPair parse(const std::string& text);  // "bandwidth:miss_rate" etc.

    std::string name() const;
    const char* x_name() const;
    const char* y_name() const;

    bool operator==(const AxisPair&) const = default;
};

/// Per-record critical scales: the smallest k at which each record is
/// captured.  Order follows the dataset; records that can never be captured
/// (zero band on the side of a nonzero error) carry +infinity.
struct CriticalScaleSet {
    std::vector<double> scales;

    std::int64_t n_infinite() const;
};

CriticalScaleSet critical_scales(const Dataset& ds);

/// One curve vertex: metrics evaluated at scale k.  `captured` is the number
/// of records whose critical scale equals k exactly (ties collapse here).
struct OperatingPoint {
    double k;
    double x;
    double y;
    std::int64_t captured;
};

struct UccCurve {
    AxisPair axes;
    std::vector<OperatingPoint> points;  // ascending k; starts at the k=0 anchor
    std::int64_t n = 0;                  // records in the underlying dataset
    std::int64_t n_infinite = 0;         // records never captured at finite k
    std::string model_label;
    std::string dataset_label;
    std::uint64_t base_fp = 0;  // fingerprint of (y, y_hat); guards comparisons

    /// Deficit curves only: the full piecewise-linear operating path — the
    /// operating points plus the breakpoints where a captured record's nearer
    /// bound switches sides (asymmetric bands bend the excess slope there,
    /// captured = 0 at such rows).  Integration uses this when present;
    /// serialization carries `points` only, so a parsed curve integrates the
    /// polyline through its operating points instead.
    std::vector<OperatingPoint> path;
};

/// Builds the curve by sweeping k over the distinct critical scales (plus the
/// k=0 anchor).  Miss rates come from the capture ranks, never from
/// re-evaluating the capture test, so boundary rounding cannot shift a vertex.
/// bandwidth:miss_rate needs no per-scale pass and costs O(N log N);
/// excess:miss_rate runs one fused kernel pass per distinct scale, and
/// excess:deficit one per path breakpoint (at most 2N of them).
UccCurve build_ucc(const Dataset& ds, AxisPair axes, std::string model_label = "");

/// Integration rule for miss-rate curves, which are step functions of k.
/// Deficit curves are piecewise linear in k, so their area is the exact
/// trapezoid sum over the vertices and the estimator flag does not apply.
enum class AreaEstimator {
    step_left,   // canonical: sum of y_(j-1) * (x_j - x_(j-1))
    step_right,  // comparison variant using the post-capture y_j
};

enum class InfiniteScalePolicy { fail, exclude };

/// Area under the operating path.  For miss-rate curves the canonical
/// (step_left) value equals the per-record mean of x at the critical scales.
/// With never-captured records present the area is open-ended, so the default
/// policy throws InfiniteScalesPresent; `exclude` returns, for miss-rate
/// curves, the mean capture-x over the capturable records, and for deficit
/// curves the raw area up to the last finite vertex.
double auucc(const UccCurve& curve, AreaEstimator estimator = AreaEstimator::step_left,
             InfiniteScalePolicy policy = InfiniteScalePolicy::fail);

/// Area of the part of the curve whose y value lies in [y_lo, y_hi].  Step
/// segments of a miss-rate curve are in or out as a whole (no interpolation);
/// the linear segments of a deficit curve are clipped exactly.
double partial_auucc(const UccCurve& curve, double y_lo, double y_hi);

/// Relative area reduction of `model` against `reference`, in percent:
/// 100 * (A_ref - A_model) / A_ref.  Both curves must share axes and base
/// predictions (MismatchedBase otherwise); zero reference area is an error.
double auucc_gain(const UccCurve& model, const UccCurve& reference);

/// Linear operating cost c*x + (1-c)*y, c in [0, 1].
double cost(const OperatingPoint& op, double c);

struct OptimalOp {
    OperatingPoint point;
    double cost;
};

/// Vertex minimizing cost(op, c); ties resolve toward the smaller k.
OptimalOp optimal_operating_point(const UccCurve& curve, double c);

/// First vertex (in ascending k) whose miss rate is <= target.  Requires a
/// miss-rate y axis; throws TargetUnreachable when even the last vertex misses
/// more than the target allows.
OperatingPoint op_at_miss_rate(const UccCurve& curve, double target);

}  // namespace ucc
