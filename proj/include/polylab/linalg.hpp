#pragma once

#include <vector>

#include "polylab/sample_matrix.hpp"

namespace polylab::linalg {

// Eigendecomposition of a symmetric n x n matrix (row-major) by cyclic
// Jacobi rotations. Eigenvalues ascending; eigenvectors[k] belongs to
// eigenvalues[k]. Intended for the small Gram matrices of desk-scale runs.
struct SymEigen {
    std::vector<double> eigenvalues;
    std::vector<std::vector<double>> eigenvectors;
};
SymEigen jacobi_eigen_sym(const std::vector<double>& a, int n, int max_sweeps = 64);

// Right-singular directions of G: unit eigenvectors of G'G for the largest
// and smallest singular values.
struct SingularDirections {
    std::vector<double> top;
    std::vector<double> bottom;
};
SingularDirections right_singular_directions(const SampleMatrix& g);

}  // namespace polylab::linalg
