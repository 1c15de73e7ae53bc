#include "ucc/kernels.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>

namespace ucc::kernels {

#if defined(UCC_HAVE_AVX2)
IntervalSums interval_sums_avx2(const double* err, const double* z_lower,
                                const double* z_upper, std::size_t n, double k);
#endif

IntervalSums interval_sums_scalar(const double* err, const double* z_lower,
                                  const double* z_upper, std::size_t n, double k) {
    IntervalSums out;
    for (std::size_t i = 0; i < n; ++i) {
        const double e_lo = err[i] + k * z_lower[i];  // slack to the lower bound
        const double e_up = k * z_upper[i] - err[i];  // slack to the upper bound
        const double m = std::min(e_lo, e_up);
        if (m < 0.0) {
            out.deficit -= m;
            ++out.misses;
        } else {
            out.excess += m;
        }
    }
    return out;
}

namespace {

bool cpu_has_avx2() {
#if defined(UCC_HAVE_AVX2) && defined(__GNUC__)
    return __builtin_cpu_supports("avx2") != 0;
#else
    return false;
#endif
}

Backend pick_default() {
    if (const char* env = std::getenv("UCC_KERNEL")) {
        const std::string v(env);
        if (v == "scalar") return Backend::scalar;
        if (v == "avx2" && backend_available(Backend::avx2)) return Backend::avx2;
        // "auto" or anything unrecognized falls through to detection
    }
    return backend_available(Backend::avx2) ? Backend::avx2 : Backend::scalar;
}

Backend& backend_slot() {
    static Backend b = pick_default();
    return b;
}

}  // namespace

bool backend_available(Backend b) {
    switch (b) {
        case Backend::scalar: return true;
        case Backend::avx2: return cpu_has_avx2();
    }
    return false;
}

const char* backend_name(Backend b) {
    switch (b) {
        case Backend::scalar: return "scalar";
        case Backend::avx2: return "avx2";
    }
    return "?";
}

Backend active_backend() { return backend_slot(); }

void set_backend(Backend b) {
    if (!backend_available(b)) {
        throw std::runtime_error(std::string("kernel backend unavailable: ") + backend_name(b));
    }
    backend_slot() = b;
}

IntervalSums interval_sums(const double* err, const double* z_lower,
                           const double* z_upper, std::size_t n, double k) {
#if defined(UCC_HAVE_AVX2)
    if (backend_slot() == Backend::avx2) {
        return interval_sums_avx2(err, z_lower, z_upper, n, k);
    }
#endif
    return interval_sums_scalar(err, z_lower, z_upper, n, k);
}

}  // namespace ucc::kernels
