// AVX2 lane of the fused interval kernel.  Compiled with -mavx2 only (no FMA),
// so each element sees exactly the same mul/add/sub/min rounding as the scalar
// reference; results differ from scalar only by summation order.

#include <immintrin.h>

#include "ucc/kernels.hpp"

namespace ucc::kernels {

namespace {

inline double reduce4(__m256d v) {
    const __m128d lo = _mm256_castpd256_pd128(v);
    const __m128d hi = _mm256_extractf128_pd(v, 1);
    const __m128d pair = _mm_add_pd(lo, hi);              // {l0+h0, l1+h1}
    const __m128d swap = _mm_unpackhi_pd(pair, pair);
    return _mm_cvtsd_f64(_mm_add_sd(pair, swap));
}

}  // namespace

IntervalSums interval_sums_avx2(const double* err, const double* z_lower,
                                const double* z_upper, std::size_t n, double k) {
    const __m256d kv = _mm256_set1_pd(k);
    const __m256d zero = _mm256_setzero_pd();

    __m256d ex0 = zero, ex1 = zero, de0 = zero, de1 = zero;
    std::int64_t misses = 0;

    std::size_t i = 0;
    for (; i + 8 <= n; i += 8) {
        const __m256d e_a = _mm256_loadu_pd(err + i);
        const __m256d e_b = _mm256_loadu_pd(err + i + 4);
        const __m256d lo_a = _mm256_add_pd(e_a, _mm256_mul_pd(kv, _mm256_loadu_pd(z_lower + i)));
        const __m256d lo_b = _mm256_add_pd(e_b, _mm256_mul_pd(kv, _mm256_loadu_pd(z_lower + i + 4)));
        const __m256d up_a = _mm256_sub_pd(_mm256_mul_pd(kv, _mm256_loadu_pd(z_upper + i)), e_a);
        const __m256d up_b = _mm256_sub_pd(_mm256_mul_pd(kv, _mm256_loadu_pd(z_upper + i + 4)), e_b);
        const __m256d m_a = _mm256_min_pd(lo_a, up_a);
        const __m256d m_b = _mm256_min_pd(lo_b, up_b);

        ex0 = _mm256_add_pd(ex0, _mm256_max_pd(m_a, zero));
        ex1 = _mm256_add_pd(ex1, _mm256_max_pd(m_b, zero));
        de0 = _mm256_add_pd(de0, _mm256_max_pd(_mm256_sub_pd(zero, m_a), zero));
        de1 = _mm256_add_pd(de1, _mm256_max_pd(_mm256_sub_pd(zero, m_b), zero));

        const int miss_a = _mm256_movemask_pd(_mm256_cmp_pd(m_a, zero, _CMP_LT_OQ));
        const int miss_b = _mm256_movemask_pd(_mm256_cmp_pd(m_b, zero, _CMP_LT_OQ));
        misses += __builtin_popcount(miss_a) + __builtin_popcount(miss_b);
    }
    for (; i + 4 <= n; i += 4) {
        const __m256d e = _mm256_loadu_pd(err + i);
        const __m256d lo = _mm256_add_pd(e, _mm256_mul_pd(kv, _mm256_loadu_pd(z_lower + i)));
        const __m256d up = _mm256_sub_pd(_mm256_mul_pd(kv, _mm256_loadu_pd(z_upper + i)), e);
        const __m256d m = _mm256_min_pd(lo, up);
        ex0 = _mm256_add_pd(ex0, _mm256_max_pd(m, zero));
        de0 = _mm256_add_pd(de0, _mm256_max_pd(_mm256_sub_pd(zero, m), zero));
        misses += __builtin_popcount(_mm256_movemask_pd(_mm256_cmp_pd(m, zero, _CMP_LT_OQ)));
    }

    IntervalSums out;
    out.excess = reduce4(_mm256_add_pd(ex0, ex1));
    out.deficit = reduce4(_mm256_add_pd(de0, de1));
    out.misses = misses;

    for (; i < n; ++i) {
        const double e_lo = err[i] + k * z_lower[i];
        const double e_up = k * z_upper[i] - err[i];
        const double m = e_lo < e_up ? e_lo : e_up;
        if (m < 0.0) {
            out.deficit -= m;
            ++out.misses;
        } else {
            out.excess += m;
        }
    }
    return out;
}

}  // namespace ucc::kernels
