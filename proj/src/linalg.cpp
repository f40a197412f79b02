#include "polylab/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "polylab/errors.hpp"
#include "polylab/kernels.hpp"

namespace polylab::linalg {

SymEigen jacobi_eigen_sym(const std::vector<double>& a, int n, int max_sweeps) {
    if (n < 1 || static_cast<std::size_t>(n) * n != a.size())
        throw ConfigError("jacobi_eigen_sym: bad dimensions");
    std::vector<double> m = a;
    std::vector<double> v(static_cast<std::size_t>(n) * n, 0.0);
    for (int i = 0; i < n; ++i) v[static_cast<std::size_t>(i) * n + i] = 1.0;

    auto idx = [n](int i, int j) { return static_cast<std::size_t>(i) * n + j; };
    for (int sweep = 0; sweep < max_sweeps; ++sweep) {
        double off = 0.0;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) off += m[idx(i, j)] * m[idx(i, j)];
        if (off <= 1e-28 * (1.0 + std::fabs(m[0]))) break;
        for (int p = 0; p < n - 1; ++p) {
            for (int q = p + 1; q < n; ++q) {
                double apq = m[idx(p, q)];
                if (std::fabs(apq) < 1e-300) continue;
                double app = m[idx(p, p)], aqq = m[idx(q, q)];
                double theta = 0.5 * (aqq - app) / apq;
                double t = (theta >= 0.0 ? 1.0 : -1.0) /
                           (std::fabs(theta) + std::sqrt(theta * theta + 1.0));
                double c = 1.0 / std::sqrt(t * t + 1.0);
                double s = t * c;
                for (int k = 0; k < n; ++k) {
                    double akp = m[idx(k, p)], akq = m[idx(k, q)];
                    m[idx(k, p)] = c * akp - s * akq;
                    m[idx(k, q)] = s * akp + c * akq;
                }
                for (int k = 0; k < n; ++k) {
                    double apk = m[idx(p, k)], aqk = m[idx(q, k)];
                    m[idx(p, k)] = c * apk - s * aqk;
                    m[idx(q, k)] = s * apk + c * aqk;
                }
                for (int k = 0; k < n; ++k) {
                    double vkp = v[idx(k, p)], vkq = v[idx(k, q)];
                    v[idx(k, p)] = c * vkp - s * vkq;
                    v[idx(k, q)] = s * vkp + c * vkq;
                }
            }
        }
    }

    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(),
              [&](int i, int j) { return m[idx(i, i)] < m[idx(j, j)]; });

    SymEigen out;
    out.eigenvalues.resize(n);
    out.eigenvectors.assign(n, std::vector<double>(n));
    for (int k = 0; k < n; ++k) {
        out.eigenvalues[k] = m[idx(order[k], order[k])];
        for (int i = 0; i < n; ++i) out.eigenvectors[k][i] = v[idx(i, order[k])];
    }
    return out;
}

SingularDirections right_singular_directions(const SampleMatrix& g) {
    int n = g.cols;
    std::vector<double> gram(static_cast<std::size_t>(n) * n, 0.0);
    for (int i = 0; i < g.rows; ++i) {
        const double* row = g.row(i);
        for (int a = 0; a < n; ++a)
            for (int b = a; b < n; ++b) gram[static_cast<std::size_t>(a) * n + b] += row[a] * row[b];
    }
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < a; ++b)
            gram[static_cast<std::size_t>(a) * n + b] = gram[static_cast<std::size_t>(b) * n + a];

    SymEigen eig = jacobi_eigen_sym(gram, n);
    return {eig.eigenvectors.back(), eig.eigenvectors.front()};
}

}  // namespace polylab::linalg
