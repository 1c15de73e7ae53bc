#pragma once

#include <cstdint>
#include <vector>

#include "ucc/curve.hpp"
#include "ucc/dataset.hpp"

namespace ucc {

enum class SyntheticKind { xsinx, heteroskedastic };

/// Parameters of the synthetic generators.  The noise band is
///   xsinx:            per-record noise sigma drawn uniform in [noise_lo, noise_hi]
///   heteroskedastic:  sigma(t) = noise_lo + (noise_hi - noise_lo) * t, t the covariate
struct SyntheticSpec {
    SyntheticKind kind = SyntheticKind::xsinx;
    int n_train = 4000;
    int n_test = 1000;
    double noise_lo = 1.0;
    double noise_hi = 1.0;
    std::uint64_t seed = 0;
};

inline SyntheticSpec hetero_spec(int n, std::uint64_t seed) {
    return {SyntheticKind::heteroskedastic, 0, n, 0.4, 2.0, seed};
}

/// The x*sin(x) target used by the xsinx generator.
double xsinx(double x);

/// Train pairs (uniform x, noisy y) and a noise-free test grid on [0, 20].
/// The test side has no bands yet; attach them with xsinx_standin() or the
/// reference generators.
struct XsinxData {
    std::vector<double> train_x, train_y;
    std::vector<double> test_x, test_y;
};

XsinxData gen_xsinx(const SyntheticSpec& spec);

/// Deterministic stand-ins for trained regressors on the xsinx test grid.
/// Both predict the target plus a fixed smooth bias field; `tuned` bands track
/// the realized error loosely, `weak` bands shrink where the error grows.
enum class StandinQuality { tuned, weak };

Dataset xsinx_standin(const XsinxData& data, StandinQuality quality, std::uint64_t seed);

/// Heteroskedastic regression sample with oracle bands: y = f(t) + sigma(t)*e,
/// e ~ N(0,1), y_hat = f(t), z = sigma(t).  Scaling oracle bands reaches any
/// target miss rate with the least possible width, so gains against the
/// constant reference on excess-based axes are structurally positive.
Dataset gen_heteroskedastic(const SyntheticSpec& spec);

/// Reference AUUCC oracle that bypasses the curve machinery entirely: sweeps a
/// dense uniform k grid up to the largest finite critical scale, evaluates the
/// axis metrics directly and integrates the polyline with the trapezoid rule.
/// Converges to the curve area as grid_size grows — from below for miss-rate
/// curves, whose steps the trapezoid undercuts.
double brute_force_auucc(const Dataset& ds, AxisPair axes, std::int64_t grid_size);

}  // namespace ucc
