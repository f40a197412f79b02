#include "polylab/kernels.hpp"

#include <cmath>

// Reference kernels. Plain sequential loops; the SIMD variants are tested
// against these.

namespace polylab::kernels::detail {
namespace {

double dot_scalar(const double* a, const double* b, std::size_t n) {
    double s = 0.0;
    for (std::size_t i = 0; i < n; ++i) s += a[i] * b[i];
    return s;
}

double sum_sq_scalar(const double* a, std::size_t n) {
    double s = 0.0;
    for (std::size_t i = 0; i < n; ++i) s += a[i] * a[i];
    return s;
}

double sum_abs_scalar(const double* a, std::size_t n) {
    double s = 0.0;
    for (std::size_t i = 0; i < n; ++i) s += std::fabs(a[i]);
    return s;
}

double max_abs_scalar(const double* a, std::size_t n) {
    double m = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        double v = std::fabs(a[i]);
        if (v > m) m = v;
    }
    return m;
}

double rows_absdot_max_scalar(const double* g, std::size_t rows, std::size_t cols,
                              const double* z) {
    double m = 0.0;
    for (std::size_t i = 0; i < rows; ++i) {
        double v = std::fabs(dot_scalar(g + i * cols, z, cols));
        if (v > m) m = v;
    }
    return m;
}

std::size_t rows_absdot_count_ge_scalar(const double* g, std::size_t rows, std::size_t cols,
                                        const double* z, double threshold) {
    std::size_t c = 0;
    for (std::size_t i = 0; i < rows; ++i) {
        if (std::fabs(dot_scalar(g + i * cols, z, cols)) >= threshold) ++c;
    }
    return c;
}

}  // namespace

const Ops scalar_ops = {
    dot_scalar,      sum_sq_scalar,          sum_abs_scalar,
    max_abs_scalar,  rows_absdot_max_scalar, rows_absdot_count_ge_scalar,
};

}  // namespace polylab::kernels::detail
