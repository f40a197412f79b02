#pragma once

#include <cstddef>
#include <string>

// Data-parallel inner loops shared by the gauge, polytope and Monte Carlo
// code. Every kernel exists as a scalar reference implementation and, on
// x86-64 with AVX2+FMA, as a vectorized variant. The backend is picked once
// at startup (overridable with POLYLAB_SIMD=scalar|avx2|auto or set_backend)
// and stays fixed for the lifetime of the process, so a run's arithmetic is
// reproducible bit for bit.
//
// Vector reductions reassociate sums, so the two backends may differ in the
// last few ulps; the equivalence suite pins the allowed divergence.

namespace polylab::kernels {

struct Ops {
    // <a,b>
    double (*dot)(const double* a, const double* b, std::size_t n);
    // sum_i a_i^2
    double (*sum_sq)(const double* a, std::size_t n);
    // sum_i |a_i|
    double (*sum_abs)(const double* a, std::size_t n);
    // max_i |a_i|, 0 for empty input
    double (*max_abs)(const double* a, std::size_t n);
    // max_i |<row_i(G), z>| over an N x n row-major matrix, 0 when N = 0
    double (*rows_absdot_max)(const double* g, std::size_t rows, std::size_t cols,
                              const double* z);
    // #{ i : |<row_i(G), z>| >= threshold }
    std::size_t (*rows_absdot_count_ge)(const double* g, std::size_t rows, std::size_t cols,
                                        const double* z, double threshold);
};

enum class Backend { scalar, avx2 };

// The table in use; resolved on first call.
const Ops& ops();
Backend active_backend();
std::string backend_name();

// Force a backend (tests, POLYLAB_SIMD). Throws ConfigError if unsupported.
void set_backend(Backend b);

namespace detail {
extern const Ops scalar_ops;
#if defined(__x86_64__) || defined(_M_X64)
extern const Ops avx2_ops;
#endif
bool avx2_supported();
}  // namespace detail

// Convenience forwarders.
inline double dot(const double* a, const double* b, std::size_t n) { return ops().dot(a, b, n); }
inline double sum_sq(const double* a, std::size_t n) { return ops().sum_sq(a, n); }
inline double sum_abs(const double* a, std::size_t n) { return ops().sum_abs(a, n); }
inline double max_abs(const double* a, std::size_t n) { return ops().max_abs(a, n); }
inline double rows_absdot_max(const double* g, std::size_t rows, std::size_t cols, const double* z) {
    return ops().rows_absdot_max(g, rows, cols, z);
}
inline std::size_t rows_absdot_count_ge(const double* g, std::size_t rows, std::size_t cols,
                                        const double* z, double threshold) {
    return ops().rows_absdot_count_ge(g, rows, cols, z, threshold);
}

}  // namespace polylab::kernels
