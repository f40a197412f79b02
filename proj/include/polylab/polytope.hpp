#pragma once

#include <span>
#include <vector>

#include "polylab/interp_norm.hpp"
#include "polylab/sample_matrix.hpp"

// The random polytope K = absconv(X_1,...,X_N) = Gamma* B_1^N. Its support
// function is h_K(z) = ||Gamma z||_inf; its Minkowski gauge at v is the
// l1-minimal coefficient vector with Gamma' t = v, computed by the internal
// simplex.

namespace polylab::polytope {

enum class GaugeStatus { Optimal, Infeasible };

struct GaugeResult {
    GaugeStatus status = GaugeStatus::Infeasible;
    double value = 0.0;                // +inf when infeasible
    std::vector<double> certificate;   // t with Gamma' t = v, ||t||_1 = value
    bool infinite() const { return status == GaugeStatus::Infeasible; }
};

// max_i |<X_i, z>|.
double support_seminorm(const SampleMatrix& g, std::span<const double> z);

// Minkowski gauge of K at v: min ||t||_1 s.t. Gamma' t = v. Infeasible when
// v is outside the row span (gauge +inf).
GaugeResult gauge_lp(const SampleMatrix& g, std::span<const double> v);

// v in cK  <=>  gauge(v) <= c (+1e-9 slack).
bool membership(const SampleMatrix& g, std::span<const double> v, double c);

// #{ i : |<X_i, z>| >= threshold }.
long count_large_coords(const SampleMatrix& g, std::span<const double> z, double threshold);

struct ContainmentCertificate {
    double c_certified = 0.0;
    long net_size = 0;
    double eps = 0.0;        // net covering radius used for the correction
    double lipschitz = 0.0;  // max row l2 norm
    double net_min = 0.0;    // min ||Gamma z||_inf over the net
};

// Deterministic containment certificate for one draw: every direction z on
// the polar boundary is within eps (l2) of a net point, and z -> ||Gamma z||_inf
// is Lipschitz with constant max_i ||X_i||_2, so
//   c_certified = max(0, min_net ||Gamma z||_inf - eps * max_i ||X_i||_2)
// guarantees c_certified * L_r c= K.
ContainmentCertificate certified_containment(const SampleMatrix& g,
                                             const interp::InterpolationIndex& idx,
                                             const std::vector<std::vector<double>>& net,
                                             double eps);

// max_i ||X_i||_2 (the Lipschitz constant above).
double max_row_l2(const SampleMatrix& g);

}  // namespace polylab::polytope
