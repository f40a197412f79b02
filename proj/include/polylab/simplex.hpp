#pragma once

#include <vector>

// Dense two-phase primal simplex for the small equality-form programs that
// back the polytope gauge:  min c'x  s.t.  Ax = b, x >= 0. Deterministic:
// partial pricing with a rotating column block, switching to Bland's rule
// after a degenerate streak so cycling is impossible.

namespace polylab::lp {

struct Options {
    double pivot_tol = 1e-10;   // entries below this cannot be pivots
    double feas_tol = 1e-8;     // phase-1 objective above this -> infeasible
    double cost_tol = 1e-9;     // reduced-cost optimality threshold
    int max_iterations = 0;     // 0 -> automatic from problem size
    int bland_after = 64;       // degenerate pivots before Bland's rule kicks in
};

enum class Status { Optimal, Infeasible };

struct Solution {
    Status status = Status::Infeasible;
    double objective = 0.0;
    std::vector<double> x;
    int iterations = 0;
};

// a is row-major with n_rows x n_cols. Throws SolverError when the pivot
// tolerance cannot be honored or the iteration cap is hit.
Solution solve(const std::vector<double>& a, int n_rows, int n_cols,
               const std::vector<double>& b, const std::vector<double>& c,
               const Options& opts = {});

}  // namespace polylab::lp
