#pragma once

#include <cstddef>
#include <cstdint>
#include <string>

namespace ucc::kernels {

/// Accumulated band statistics at one calibration scale k.
/// For record i with signed error e = y - y_hat, let
///   m_i = min(e + k*z_lower, k*z_upper - e).
/// The record is captured iff m_i >= 0 (band boundaries count as captured).
///   excess  = sum of m_i over captured records (slack to the nearer bound)
///   deficit = sum of -m_i over missed records (shortfall past the nearer bound)
///   misses  = number of records with m_i < 0
struct IntervalSums {
    double excess = 0.0;
    double deficit = 0.0;
    std::int64_t misses = 0;
};

IntervalSums interval_sums_scalar(const double* err, const double* z_lower,
                                  const double* z_upper, std::size_t n, double k);

enum class Backend { scalar, avx2 };

const char* backend_name(Backend b);

/// Backend used by interval_sums().  Defaults to the widest lane the CPU
/// supports; the UCC_KERNEL environment variable (auto|scalar|avx2) overrides.
Backend active_backend();

/// Force a backend; throws std::runtime_error if it is unavailable here.
void set_backend(Backend b);

bool backend_available(Backend b);

/// Fused per-record pass at scale k, dispatched to the active backend.
/// All backends perform identical per-element arithmetic (no FMA contraction);
/// only the order of the final accumulation differs.
IntervalSums interval_sums(const double* err, const double* z_lower,
                           const double* z_upper, std::size_t n, double k);

}  // namespace ucc::kernels
