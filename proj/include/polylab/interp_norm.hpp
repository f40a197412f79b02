#pragma once

#include <span>
#include <vector>

// The interpolation body L_r = B_inf^n  ∩ sqrt(r)·B_2^n and its polar
// L_r° = conv(B_1^n ∪ (1/sqrt(r))·B_2^n). The polar gauge equals the support
// function of L_r and is evaluated exactly by water-filling: the maximizer of
// <z,w> over {||w||_inf <= 1, ||w||_2 <= sqrt(r)} has w_i = sgn(z_i)·min(1, |z_i|/mu).

namespace polylab::interp {

struct InterpolationIndex {
    int n = 1;       // ambient dimension
    double r = 1.0;  // 1 <= r <= n; non-integer allowed for gauge evaluation

    InterpolationIndex(int n_, double r_);
};

struct RearrangedVector {
    std::vector<double> values;  // |z| sorted nonincreasing
    std::vector<int> perm;       // perm[k] = original index of sorted position k
};

// Nonincreasing rearrangement of |z| with index provenance; ties keep
// original index order.
RearrangedVector rearrange_desc(std::span<const double> z);

// Gauge of L_r: max(||z||_inf, ||z||_2 / sqrt(r)).
double primal_gauge(std::span<const double> z, const InterpolationIndex& idx);

// Exact polar gauge ||z||_{L_r°} = h_{L_r}(z) by water-filling.
double dual_gauge_exact(std::span<const double> z, const InterpolationIndex& idx);

// Holmstedt's two-sided expression: sum of the r largest |z_i| plus sqrt(r)
// times the l2 norm of the rest. Requires integer r.
double holmstedt_approx(std::span<const double> z, const InterpolationIndex& idx);

// z / dual_gauge_exact(z); lands on the polar boundary (gauge 1 up to 1e-12).
std::vector<double> normalize_to_dual_sphere(std::span<const double> z,
                                             const InterpolationIndex& idx);

}  // namespace polylab::interp
