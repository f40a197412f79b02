// AVX2+FMA variants of the reference kernels. Built unconditionally on
// x86-64 via function-level target attributes; only dispatched to when the
// CPU reports avx2 and fma.

#if defined(__x86_64__) || defined(_M_X64)

#include <immintrin.h>

#include <cmath>
#include <cstdint>

#include "polylab/kernels.hpp"

#define POLYLAB_AVX2 __attribute__((target("avx2,fma")))

namespace polylab::kernels::detail {
namespace {

POLYLAB_AVX2 inline double hsum(__m256d v) {
    __m128d lo = _mm256_castpd256_pd128(v);
    __m128d hi = _mm256_extractf128_pd(v, 1);
    lo = _mm_add_pd(lo, hi);
    __m128d sh = _mm_unpackhi_pd(lo, lo);
    return _mm_cvtsd_f64(_mm_add_sd(lo, sh));
}

POLYLAB_AVX2 inline double hmax(__m256d v) {
    __m128d lo = _mm256_castpd256_pd128(v);
    __m128d hi = _mm256_extractf128_pd(v, 1);
    lo = _mm_max_pd(lo, hi);
    __m128d sh = _mm_unpackhi_pd(lo, lo);
    return _mm_cvtsd_f64(_mm_max_sd(lo, sh));
}

POLYLAB_AVX2 inline __m256d abs_pd(__m256d v) {
    const __m256d mask = _mm256_castsi256_pd(_mm256_set1_epi64x(0x7fffffffffffffffLL));
    return _mm256_and_pd(v, mask);
}

POLYLAB_AVX2 double dot_avx2(const double* a, const double* b, std::size_t n) {
    __m256d acc0 = _mm256_setzero_pd();
    __m256d acc1 = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 8 <= n; i += 8) {
        acc0 = _mm256_fmadd_pd(_mm256_loadu_pd(a + i), _mm256_loadu_pd(b + i), acc0);
        acc1 = _mm256_fmadd_pd(_mm256_loadu_pd(a + i + 4), _mm256_loadu_pd(b + i + 4), acc1);
    }
    if (i + 4 <= n) {
        acc0 = _mm256_fmadd_pd(_mm256_loadu_pd(a + i), _mm256_loadu_pd(b + i), acc0);
        i += 4;
    }
    double s = hsum(_mm256_add_pd(acc0, acc1));
    for (; i < n; ++i) s += a[i] * b[i];
    return s;
}

POLYLAB_AVX2 double sum_sq_avx2(const double* a, std::size_t n) {
    return dot_avx2(a, a, n);
}

POLYLAB_AVX2 double sum_abs_avx2(const double* a, std::size_t n) {
    __m256d acc = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) acc = _mm256_add_pd(acc, abs_pd(_mm256_loadu_pd(a + i)));
    double s = hsum(acc);
    for (; i < n; ++i) s += std::fabs(a[i]);
    return s;
}

POLYLAB_AVX2 double max_abs_avx2(const double* a, std::size_t n) {
    __m256d acc = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) acc = _mm256_max_pd(acc, abs_pd(_mm256_loadu_pd(a + i)));
    double m = hmax(acc);
    for (; i < n; ++i) {
        double v = std::fabs(a[i]);
        if (v > m) m = v;
    }
    return m;
}

POLYLAB_AVX2 double rows_absdot_max_avx2(const double* g, std::size_t rows, std::size_t cols,
                                         const double* z) {
    double m = 0.0;
    for (std::size_t i = 0; i < rows; ++i) {
        double v = std::fabs(dot_avx2(g + i * cols, z, cols));
        if (v > m) m = v;
    }
    return m;
}

POLYLAB_AVX2 std::size_t rows_absdot_count_ge_avx2(const double* g, std::size_t rows,
                                                   std::size_t cols, const double* z,
                                                   double threshold) {
    std::size_t c = 0;
    for (std::size_t i = 0; i < rows; ++i) {
        if (std::fabs(dot_avx2(g + i * cols, z, cols)) >= threshold) ++c;
    }
    return c;
}

}  // namespace

const Ops avx2_ops = {
    dot_avx2,      sum_sq_avx2,          sum_abs_avx2,
    max_abs_avx2,  rows_absdot_max_avx2, rows_absdot_count_ge_avx2,
};

}  // namespace polylab::kernels::detail

#endif  // x86-64
