#include "polylab/interp_norm.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "polylab/errors.hpp"
#include "polylab/kernels.hpp"

namespace polylab::interp {

InterpolationIndex::InterpolationIndex(int n_, double r_) : n(n_), r(r_) {
    if (n < 1) throw ConfigError("InterpolationIndex: n must be >= 1");
    if (!(r >= 1.0) || r > static_cast<double>(n))
        throw ConfigError("InterpolationIndex: need 1 <= r <= n");
}

namespace {

void check_dim(std::span<const double> z, const InterpolationIndex& idx) {
    if (static_cast<int>(z.size()) != idx.n)
        throw ConfigError("vector dimension " + std::to_string(z.size()) +
                          " does not match index n=" + std::to_string(idx.n));
}

// Water-filling on the sorted rearrangement. For mu in [a_k, a_{k-1}) the top
// k coordinates saturate and sum_i min(1, (a_i/mu)^2) = k + T_k/mu^2 with
// T_k the tail sum of squares, so the correct piece has a closed-form mu.
double dual_gauge_sorted(const std::vector<double>& a, double r) {
    int n = static_cast<int>(a.size());
    int nonzero = 0;
    while (nonzero < n && a[nonzero] > 0.0) ++nonzero;
    if (nonzero == 0) return 0.0;
    double l1 = std::accumulate(a.begin(), a.begin() + nonzero, 0.0);
    if (r >= static_cast<double>(nonzero)) return l1;  // every coordinate saturates

    // Suffix sums of squares: tail[k] = sum_{i >= k} a_i^2.
    std::vector<double> tail(static_cast<std::size_t>(nonzero) + 1, 0.0);
    for (int i = nonzero - 1; i >= 0; --i) tail[i] = tail[i + 1] + a[i] * a[i];

    double prefix = 0.0;
    int k_max = std::min(nonzero - 1, static_cast<int>(std::floor(r)));
    int best_k = -1;
    double best_violation = std::numeric_limits<double>::infinity();
    for (int k = 0; k <= k_max; ++k) {
        double denom = r - static_cast<double>(k);
        if (denom <= 0.0) break;
        double mu = std::sqrt(tail[k] / denom);
        double hi = (k == 0) ? std::numeric_limits<double>::infinity() : a[k - 1];
        double lo = a[k];
        if (mu >= lo && mu <= hi) return prefix + std::sqrt(denom * tail[k]);
        // Track the least-violating piece as a rounding fallback.
        double viol = std::max(lo - mu, mu - hi);
        if (viol < best_violation) {
            best_violation = viol;
            best_k = k;
        }
        prefix += a[k];
    }
    // Breakpoint grazed by rounding; evaluate the nearest piece.
    double prefix_best = std::accumulate(a.begin(), a.begin() + best_k, 0.0);
    return prefix_best + std::sqrt((r - best_k) * tail[best_k]);
}

}  // namespace

RearrangedVector rearrange_desc(std::span<const double> z) {
    if (z.empty()) throw ConfigError("rearrange_desc: empty vector");
    RearrangedVector out;
    out.perm.resize(z.size());
    std::iota(out.perm.begin(), out.perm.end(), 0);
    std::stable_sort(out.perm.begin(), out.perm.end(), [&](int i, int j) {
        return std::fabs(z[i]) > std::fabs(z[j]);
    });
    out.values.resize(z.size());
    for (std::size_t k = 0; k < z.size(); ++k) out.values[k] = std::fabs(z[out.perm[k]]);
    return out;
}

double primal_gauge(std::span<const double> z, const InterpolationIndex& idx) {
    check_dim(z, idx);
    double linf = kernels::max_abs(z.data(), z.size());
    double l2 = std::sqrt(kernels::sum_sq(z.data(), z.size()));
    return std::max(linf, l2 / std::sqrt(idx.r));
}

double dual_gauge_exact(std::span<const double> z, const InterpolationIndex& idx) {
    check_dim(z, idx);
    return dual_gauge_sorted(rearrange_desc(z).values, idx.r);
}

double holmstedt_approx(std::span<const double> z, const InterpolationIndex& idx) {
    check_dim(z, idx);
    double r_int;
    if (std::modf(idx.r, &r_int) != 0.0)
        throw ConfigError("holmstedt_approx requires integer r (got " + std::to_string(idx.r) + ")");
    int r = static_cast<int>(r_int);
    auto sorted = rearrange_desc(z).values;
    double head = std::accumulate(sorted.begin(), sorted.begin() + r, 0.0);
    double tail_sq = kernels::sum_sq(sorted.data() + r, sorted.size() - r);
    return head + std::sqrt(idx.r) * std::sqrt(tail_sq);
}

std::vector<double> normalize_to_dual_sphere(std::span<const double> z,
                                             const InterpolationIndex& idx) {
    double gauge = dual_gauge_exact(z, idx);
    if (gauge == 0.0) throw ConfigError("normalize_to_dual_sphere: zero vector");
    std::vector<double> out(z.begin(), z.end());
    for (double& v : out) v /= gauge;
    return out;
}

}  // namespace polylab::interp
