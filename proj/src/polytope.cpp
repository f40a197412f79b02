#include "polylab/polytope.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "polylab/errors.hpp"
#include "polylab/kernels.hpp"
#include "polylab/simplex.hpp"

namespace polylab::polytope {

namespace {

void check_dim(const SampleMatrix& g, std::span<const double> z) {
    if (static_cast<int>(z.size()) != g.cols)
        throw ConfigError("vector dimension " + std::to_string(z.size()) +
                          " does not match matrix n=" + std::to_string(g.cols));
}

}  // namespace

double support_seminorm(const SampleMatrix& g, std::span<const double> z) {
    check_dim(g, z);
    return kernels::rows_absdot_max(g.entries.data(), g.rows, g.cols, z.data());
}

GaugeResult gauge_lp(const SampleMatrix& g, std::span<const double> v) {
    check_dim(g, v);
    int n = g.cols, big_n = g.rows;

    GaugeResult res;
    if (kernels::max_abs(v.data(), v.size()) == 0.0) {
        res.status = GaugeStatus::Optimal;
        res.value = 0.0;
        res.certificate.assign(big_n, 0.0);
        return res;
    }

    // Columns: t+ then t-; constraint rows are the n coordinates of
    // Gamma' (t+ - t-) = v.
    int cols = 2 * big_n;
    std::vector<double> a(static_cast<std::size_t>(n) * cols);
    for (int row = 0; row < n; ++row) {
        for (int i = 0; i < big_n; ++i) {
            double gij = g.at(i, row);
            a[static_cast<std::size_t>(row) * cols + i] = gij;
            a[static_cast<std::size_t>(row) * cols + big_n + i] = -gij;
        }
    }
    std::vector<double> b(v.begin(), v.end());
    std::vector<double> c(cols, 1.0);

    lp::Solution sol = lp::solve(a, n, cols, b, c);
    if (sol.status == lp::Status::Infeasible) {
        res.status = GaugeStatus::Infeasible;
        res.value = std::numeric_limits<double>::infinity();
        return res;
    }
    res.status = GaugeStatus::Optimal;
    res.value = sol.objective;
    res.certificate.resize(big_n);
    for (int i = 0; i < big_n; ++i) res.certificate[i] = sol.x[i] - sol.x[big_n + i];
    return res;
}

bool membership(const SampleMatrix& g, std::span<const double> v, double c) {
    if (c <= 0.0) throw ConfigError("membership: c must be positive");
    GaugeResult res = gauge_lp(g, v);
    return !res.infinite() && res.value <= c + 1e-9;
}

long count_large_coords(const SampleMatrix& g, std::span<const double> z, double threshold) {
    check_dim(g, z);
    if (threshold <= 0.0) throw ConfigError("count_large_coords: threshold must be positive");
    return static_cast<long>(
        kernels::rows_absdot_count_ge(g.entries.data(), g.rows, g.cols, z.data(), threshold));
}

double max_row_l2(const SampleMatrix& g) {
    double m = 0.0;
    for (int i = 0; i < g.rows; ++i)
        m = std::max(m, std::sqrt(kernels::sum_sq(g.row(i), g.cols)));
    return m;
}

ContainmentCertificate certified_containment(const SampleMatrix& g,
                                             const interp::InterpolationIndex& idx,
                                             const std::vector<std::vector<double>>& net,
                                             double eps) {
    if (net.empty()) throw ConfigError("certified_containment: empty net");
    if (eps < 0.0) throw ConfigError("certified_containment: eps must be >= 0");

    ContainmentCertificate cert;
    cert.net_size = static_cast<long>(net.size());
    cert.eps = eps;
    cert.lipschitz = max_row_l2(g);

    double net_min = std::numeric_limits<double>::infinity();
    for (const auto& z : net) {
        if (static_cast<int>(z.size()) != idx.n)
            throw ConfigError("certified_containment: net point dimension mismatch");
        double gauge = interp::dual_gauge_exact(z, idx);
        if (std::fabs(gauge - 1.0) > 1e-9)
            throw ConfigError("certified_containment: net point off the polar boundary (gauge " +
                              std::to_string(gauge) + ")");
        net_min = std::min(net_min, support_seminorm(g, z));
    }
    cert.net_min = net_min;
    cert.c_certified = std::max(0.0, net_min - eps * cert.lipschitz);
    return cert;
}

}  // namespace polylab::polytope
