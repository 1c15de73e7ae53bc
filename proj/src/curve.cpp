#include "ucc/curve.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <limits>

#include "ucc/errors.hpp"
#include "ucc/kernels.hpp"
#include "ucc/metrics.hpp"

namespace ucc {

AxisPair AxisPair::make(XMetric x, YMetric y) {
    if (x == XMetric::bandwidth && y == YMetric::deficit) {
        throw Error(ErrorCode::InvalidAxes, "InvalidAxes: bandwidth:deficit is not supported");
    }
    return {x, y};
}

AxisPair AxisPair::parse(const std::string& text) {
    const auto sep = text.find(':');
    if (sep != std::string::npos) {
        const std::string xs = text.substr(0, sep);
        const std::string ys = text.substr(sep + 1);
        if ((xs == "bandwidth" || xs == "excess") && (ys == "miss_rate" || ys == "deficit")) {
            return make(xs == "bandwidth" ? XMetric::bandwidth : XMetric::excess,
                        ys == "miss_rate" ? YMetric::miss_rate : YMetric::deficit);
        }
    }
    throw Error(ErrorCode::InvalidAxes, "InvalidAxes: unrecognized axis pair '" + text + "'");
}

const char* AxisPair::x_name() const {
    return x == XMetric::bandwidth ? "bandwidth" : "excess";
}

const char* AxisPair::y_name() const {
    return y == YMetric::miss_rate ? "miss_rate" : "deficit";
}

std::string AxisPair::name() const {
    return std::string(x_name()) + ":" + y_name();
}

std::int64_t CriticalScaleSet::n_infinite() const {
    return std::count_if(scales.begin(), scales.end(),
                         [](double k) { return std::isinf(k); });
}

CriticalScaleSet critical_scales(const Dataset& ds) {
    constexpr double inf = std::numeric_limits<double>::infinity();
    CriticalScaleSet out;
    out.scales.resize(ds.size());
    const auto err = ds.error();
    const auto zl = ds.z_lower();
    const auto zu = ds.z_upper();
    for (std::size_t i = 0; i < ds.size(); ++i) {
        const double e = err[i];
        if (e == 0.0) {
            out.scales[i] = 0.0;  // captured by the degenerate band already
        } else if (e > 0.0) {
            out.scales[i] = zu[i] > 0.0 ? e / zu[i] : inf;
        } else {
            out.scales[i] = zl[i] > 0.0 ? -e / zl[i] : inf;
        }
    }
    return out;
}

UccCurve build_ucc(const Dataset& ds, AxisPair axes, std::string model_label) {
    AxisPair::make(axes.x, axes.y);  // revalidate: struct may be aggregate-built

    const auto ks = critical_scales(ds);
    const std::int64_t n = static_cast<std::int64_t>(ds.size());

    std::vector<double> finite;
    finite.reserve(ks.scales.size());
    for (double k : ks.scales) {
        if (!std::isinf(k)) finite.push_back(k);
    }
    if (finite.empty()) {
        throw Error(ErrorCode::AllScalesInfinite,
                    "AllScalesInfinite: no record is capturable at finite scale");
    }
    std::sort(finite.begin(), finite.end());

    // Collapse exact ties into one vertex carrying the multiplicity.
    std::vector<double> distinct;
    std::vector<std::int64_t> mult;
    for (double k : finite) {
        if (distinct.empty() || k != distinct.back()) {
            distinct.push_back(k);
            mult.push_back(1);
        } else {
            ++mult.back();
        }
    }
    if (distinct.front() > 0.0) {  // anchor so every curve starts at x = 0
        distinct.insert(distinct.begin(), 0.0);
        mult.insert(mult.begin(), 0);
    }

    UccCurve curve;
    curve.axes = axes;
    curve.n = n;
    curve.n_infinite = static_cast<std::int64_t>(ks.scales.size() - finite.size());
    curve.model_label = std::move(model_label);
    curve.dataset_label = ds.name();
    curve.base_fp = base_fingerprint(ds);
    curve.points.reserve(distinct.size());

    if (axes.y == YMetric::miss_rate) {
        const bool need_kernel = axes.x == XMetric::excess;
        std::int64_t cum = 0;
        for (std::size_t j = 0; j < distinct.size(); ++j) {
            const double k = distinct[j];
            cum += mult[j];

            kernels::IntervalSums sums;
            if (need_kernel) {
                sums = kernels::interval_sums(ds.error().data(), ds.z_lower().data(),
                                              ds.z_upper().data(), ds.size(), k);
            }
            const double x = axes.x == XMetric::bandwidth ? k * ds.half_width_mean()
                                                          : sums.excess / static_cast<double>(n);
            // Miss rate comes from the rank of k among the critical scales; the
            // records captured by scale k are exactly those with k_i <= k.
            const double y = static_cast<double>(n - cum) / static_cast<double>(n);
            curve.points.push_back({k, x, y, mult[j]});
        }
        return curve;
    }

    // Deficit y axis (the x axis is excess; bandwidth:deficit was rejected
    // above).  Between capture events the deficit falls linearly in k, but the
    // excess of a captured record bends once more where its nearer bound
    // switches sides: the two arms err + k*z_lower and k*z_upper - err cross at
    // k = 2*err / (z_upper - z_lower).  The full operating path is therefore
    // the polyline over the critical scales plus those kink scales, and exact
    // integration needs both.
    std::vector<double> breaks = distinct;
    const double k_last = distinct.back();
    const auto err = ds.error();
    const auto zl = ds.z_lower();
    const auto zu = ds.z_upper();
    for (std::size_t i = 0; i < ds.size(); ++i) {
        const double dz = zu[i] - zl[i];
        if (err[i] != 0.0 && dz != 0.0) {
            const double kink = 2.0 * err[i] / dz;
            if (kink > 0.0 && kink < k_last) breaks.push_back(kink);
        }
    }
    std::sort(breaks.begin(), breaks.end());
    breaks.erase(std::unique(breaks.begin(), breaks.end()), breaks.end());

    curve.path.reserve(breaks.size());
    std::size_t next_vertex = 0;
    for (const double k : breaks) {
        const auto sums = kernels::interval_sums(err.data(), zl.data(), zu.data(), ds.size(), k);
        OperatingPoint p{k, sums.excess / static_cast<double>(n),
                         sums.deficit / static_cast<double>(n), 0};
        if (next_vertex < distinct.size() && k == distinct[next_vertex]) {
            p.captured = mult[next_vertex];
            ++next_vertex;
            curve.points.push_back(p);
        }
        curve.path.push_back(p);
    }
    return curve;
}

namespace {

// Breakpoints that carry the deficit path; curves parsed back from an export
// have no recorded path and fall back to the polyline through the operating
// points.
const std::vector<OperatingPoint>& deficit_path(const UccCurve& curve) {
    return curve.path.empty() ? curve.points : curve.path;
}

// Area under the operating path traced by the scale sweep.  A miss-rate curve
// is a step function of k (the rate moves only at capture events), so its path
// integral is the step sum: left endpoints canonically, right endpoints for
// the comparison estimator.  A deficit curve is piecewise linear between its
// breakpoints, so the trapezoid sum over them is its exact area, not an
// estimate; the estimator flag does not apply there.
double path_area(const UccCurve& curve, AreaEstimator estimator) {
    if (curve.axes.y == YMetric::miss_rate) {
        double area = 0.0;
        for (std::size_t j = 1; j < curve.points.size(); ++j) {
            const auto& a = curve.points[j - 1];
            const auto& b = curve.points[j];
            area += (estimator == AreaEstimator::step_left ? a.y : b.y) * (b.x - a.x);
        }
        return area;
    }
    const auto& path = deficit_path(curve);
    double area = 0.0;
    for (std::size_t j = 1; j < path.size(); ++j) {
        area += 0.5 * (path[j - 1].y + path[j].y) * (path[j].x - path[j - 1].x);
    }
    return area;
}

}  // namespace

double auucc(const UccCurve& curve, AreaEstimator estimator, InfiniteScalePolicy policy) {
    if (curve.n_infinite > 0) {
        if (policy == InfiniteScalePolicy::fail) {
            throw Error(ErrorCode::InfiniteScalesPresent,
                        "InfiniteScalesPresent: curve has never-captured records; "
                        "drop them or pass the exclude policy");
        }
        if (curve.axes.y == YMetric::miss_rate) {
            // Conditional mean over the capturable records: remove the floor
            // contribution n_infinite * x_last and renormalize.
            const double n = static_cast<double>(curve.n);
            const double n_fin = static_cast<double>(curve.n - curve.n_infinite);
            const double raw = path_area(curve, estimator);
            const double x_last = curve.points.back().x;
            return (n * raw - static_cast<double>(curve.n_infinite) * x_last) / n_fin;
        }
        // Deficit curves keep never-captured records in every mean; the raw
        // area up to the last finite vertex is the meaningful quantity.
    }
    return path_area(curve, estimator);
}

double partial_auucc(const UccCurve& curve, double y_lo, double y_hi) {
    if (!(y_lo >= 0.0) || !(y_lo < y_hi)) {
        throw Error(ErrorCode::InvalidRange, "InvalidRange: need 0 <= y_lo < y_hi");
    }
    if (curve.axes.y == YMetric::miss_rate && y_hi > 1.0) {
        throw Error(ErrorCode::InvalidRange, "InvalidRange: miss rate range ends above 1");
    }
    double area = 0.0;
    if (curve.axes.y == YMetric::miss_rate) {
        // Step curve: a segment carries its pre-capture rate; it is in or out,
        // never interpolated.
        for (std::size_t j = 1; j < curve.points.size(); ++j) {
            const double y = curve.points[j - 1].y;
            if (y >= y_lo && y <= y_hi) {
                area += y * (curve.points[j].x - curve.points[j - 1].x);
            }
        }
        return area;
    }
    // Deficit path: linear on each segment, so clip the y range exactly.
    const auto& path = deficit_path(curve);
    for (std::size_t j = 1; j < path.size(); ++j) {
        const auto& a = path[j - 1];
        const auto& b = path[j];
        if (a.y == b.y) {
            if (a.y >= y_lo && a.y <= y_hi) area += a.y * (b.x - a.x);
            continue;
        }
        // y decreases along the segment: parameter t where it crosses the
        // bounds, clamped to the segment.
        const double dy = b.y - a.y;
        const double t1 = std::clamp((y_hi - a.y) / dy, 0.0, 1.0);
        const double t2 = std::clamp((y_lo - a.y) / dy, 0.0, 1.0);
        if (t2 <= t1) continue;
        const double x1 = a.x + t1 * (b.x - a.x);
        const double x2 = a.x + t2 * (b.x - a.x);
        area += 0.5 * ((a.y + t1 * dy) + (a.y + t2 * dy)) * (x2 - x1);
    }
    return area;
}

double auucc_gain(const UccCurve& model, const UccCurve& reference) {
    if (!(model.axes == reference.axes)) {
        throw Error(ErrorCode::InvalidAxes, "InvalidAxes: gain requires matching axes");
    }
    if (model.base_fp != reference.base_fp || model.n != reference.n) {
        throw Error(ErrorCode::MismatchedBase,
                    "MismatchedBase: curves were built from different (y, y_hat)");
    }
    const double a_model = auucc(model);
    const double a_ref = auucc(reference);
    if (a_ref == 0.0) {
        throw Error(ErrorCode::ZeroReferenceArea, "ZeroReferenceArea: reference area is zero");
    }
    return 100.0 * (a_ref - a_model) / a_ref;
}

double cost(const OperatingPoint& op, double c) {
    assert(c >= 0.0 && c <= 1.0);
    return c * op.x + (1.0 - c) * op.y;
}

OptimalOp optimal_operating_point(const UccCurve& curve, double c) {
    OptimalOp best{curve.points.front(), cost(curve.points.front(), c)};
    for (const auto& p : curve.points) {
        const double v = cost(p, c);
        if (v < best.cost) best = {p, v};  // strict: ties keep the smaller k
    }
    return best;
}

OperatingPoint op_at_miss_rate(const UccCurve& curve, double target) {
    if (curve.axes.y != YMetric::miss_rate) {
        throw Error(ErrorCode::InvalidAxes, "InvalidAxes: curve y axis is not miss_rate");
    }
    if (!(target >= 0.0 && target <= 1.0)) {
        throw Error(ErrorCode::InvalidRange, "InvalidRange: target miss rate outside [0, 1]");
    }
    for (const auto& p : curve.points) {
        if (p.y <= target) return p;
    }
    throw Error(ErrorCode::TargetUnreachable,
                "TargetUnreachable: miss rate floor is above the target");
}

}  // namespace ucc
