#pragma once

#include <cstddef>
#include <vector>

namespace polylab {

// Row-major N x n matrix whose rows X_1,...,X_N generate the polytope
// absconv(X_1,...,X_N).
struct SampleMatrix {
    std::vector<double> entries;
    int rows = 0;  // N
    int cols = 0;  // n

    SampleMatrix() = default;
    SampleMatrix(int n_rows, int n_cols)
        : entries(static_cast<std::size_t>(n_rows) * n_cols, 0.0), rows(n_rows), cols(n_cols) {}

    double* row(int i) { return entries.data() + static_cast<std::size_t>(i) * cols; }
    const double* row(int i) const { return entries.data() + static_cast<std::size_t>(i) * cols; }
    double& at(int i, int j) { return entries[static_cast<std::size_t>(i) * cols + j]; }
    double at(int i, int j) const { return entries[static_cast<std::size_t>(i) * cols + j]; }
};

}  // namespace polylab
