#pragma once

#include <cstdint>
#include <string>

#include "polylab/rng.hpp"
#include "polylab/sample_matrix.hpp"

// Symmetric variance-1 scalar laws and the induced random vectors/matrices.
// Heavy-tailed laws are rescaled by their analytic standard deviation so the
// variance is exactly 1. Each law carries small-ball constants (kappa, delta)
// with Pr(|xi| >= kappa) >= delta; the defaults are computed in closed form.

namespace polylab::dist {

enum class Kind { Gaussian, Rademacher, UniformSym, StudentT, ParetoSym, TwoPointMix };

struct DistributionSpec {
    Kind kind = Kind::Gaussian;
    double dof = 0.0;    // StudentT, > 2 required (spec ships dof >= 3)
    double shape = 0.0;  // ParetoSym, > 2
    double a = 0.0;      // TwoPointMix: |xi| = a with probability p
    double p = 0.0;      // TwoPointMix
    double kappa = 1.0;
    double delta = 0.0;

    // Stable config-file names: "gaussian", "rademacher", "uniform",
    // "student_t:5", "pareto:3", "twopoint:a=2,p=0.125".
    static DistributionSpec parse(const std::string& name);
    static DistributionSpec make(Kind kind, double param1 = 0.0, double param2 = 0.0);
    std::string name() const;
};

// One draw, variance exactly 1.
double sample_scalar(const DistributionSpec& spec, rng::SeededStream& stream);

// N x n matrix of iid draws, rows X_1..X_N. Throws ResourceError if N*n
// exceeds max_entries.
SampleMatrix sample_matrix(const DistributionSpec& spec, int n_rows, int n_cols,
                           rng::SeededStream& stream,
                           std::size_t max_entries = std::size_t{1} << 27);

struct SmallBallEstimate {
    double delta_hat = 0.0;
    double stderr_ = 0.0;
    long trials = 0;
};

// delta_hat = #{|xi| >= kappa} / M with binomial standard error.
SmallBallEstimate estimate_small_ball(const DistributionSpec& spec, double kappa, long trials,
                                      rng::SeededStream& stream);

// Pr(|xi| >= kappa) in closed form (used for the shipped defaults).
double small_ball_mass(const DistributionSpec& spec, double kappa);

}  // namespace polylab::dist
