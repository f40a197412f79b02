#include "polylab/simplex.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "polylab/errors.hpp"

namespace polylab::lp {

namespace {

// Full-tableau simplex over columns [0, n_total): structural variables first,
// then the m artificials. Row layout: m constraint rows plus a cost row.
class Tableau {
  public:
    Tableau(const std::vector<double>& a, int m, int n, const std::vector<double>& b,
            const Options& opts)
        : m_(m), n_(n), width_(n + m + 1), opts_(opts), t_(static_cast<std::size_t>(m + 1) * (n + m + 1), 0.0),
          basis_(m) {
        for (int i = 0; i < m; ++i) {
            double sign = b[i] < 0.0 ? -1.0 : 1.0;
            for (int j = 0; j < n; ++j) at(i, j) = sign * a[static_cast<std::size_t>(i) * n + j];
            at(i, n + i) = 1.0;
            rhs(i) = sign * b[i];
            basis_[i] = n + i;
        }
    }

    // Minimize sum of artificials.
    bool phase1() {
        for (int j = 0; j < width_; ++j) cost(j) = 0.0;
        for (int i = 0; i < m_; ++i) cost(n_ + i) = 1.0;
        reduce_cost_row();
        iterate(/*allow_artificial_entering=*/false);
        if (objective() > opts_.feas_tol) return false;
        drive_out_artificials();
        return true;
    }

    // Minimize c'x over structural columns with the current basis.
    void phase2(const std::vector<double>& c) {
        for (int j = 0; j < width_; ++j) cost(j) = 0.0;
        for (int j = 0; j < n_; ++j) cost(j) = c[j];
        reduce_cost_row();
        iterate(false);
    }

    double objective() const { return -t_[static_cast<std::size_t>(m_) * width_ + width_ - 1]; }

    std::vector<double> extract_x() const {
        std::vector<double> x(n_, 0.0);
        for (int i = 0; i < m_; ++i)
            if (basis_[i] < n_) x[basis_[i]] = rhs_const(i);
        return x;
    }

    int iterations = 0;

  private:
    double& at(int i, int j) { return t_[static_cast<std::size_t>(i) * width_ + j]; }
    double at_const(int i, int j) const { return t_[static_cast<std::size_t>(i) * width_ + j]; }
    double& rhs(int i) { return at(i, width_ - 1); }
    double rhs_const(int i) const { return at_const(i, width_ - 1); }
    double& cost(int j) { return at(m_, j); }
    double cost_const(int j) const { return at_const(m_, j); }

    // Subtract basic rows so reduced costs of basic columns are zero.
    void reduce_cost_row() {
        for (int i = 0; i < m_; ++i) {
            double cb = cost_const(basis_[i]);
            if (cb == 0.0) continue;
            for (int j = 0; j < width_; ++j) at(m_, j) -= cb * at_const(i, j);
        }
    }

    // Entering column: partial pricing over rotating blocks, or Bland.
    int pick_entering(bool bland, int limit) {
        if (bland) {
            for (int j = 0; j < limit; ++j)
                if (cost_const(j) < -opts_.cost_tol) return j;
            return -1;
        }
        constexpr int kBlock = 64;
        int blocks = (limit + kBlock - 1) / kBlock;
        for (int step = 0; step < blocks; ++step) {
            int blk = (pricing_block_ + step) % blocks;
            int lo = blk * kBlock, hi = std::min(limit, lo + kBlock);
            int best = -1;
            double best_cost = -opts_.cost_tol;
            for (int j = lo; j < hi; ++j) {
                if (cost_const(j) < best_cost) {
                    best_cost = cost_const(j);
                    best = j;
                }
            }
            if (best >= 0) {
                pricing_block_ = blk;
                return best;
            }
        }
        return -1;
    }

    // Leaving row by the ratio test; ties by smallest basis index.
    int pick_leaving(int enter) {
        int row = -1;
        double best_ratio = std::numeric_limits<double>::infinity();
        for (int i = 0; i < m_; ++i) {
            double pivot = at_const(i, enter);
            if (pivot <= opts_.pivot_tol) continue;
            double ratio = rhs_const(i) / pivot;
            if (ratio < best_ratio - 1e-12 ||
                (ratio < best_ratio + 1e-12 && (row < 0 || basis_[i] < basis_[row]))) {
                best_ratio = ratio;
                row = i;
            }
        }
        return row;
    }

    void pivot(int row, int col) {
        double piv = at_const(row, col);
        double inv = 1.0 / piv;
        for (int j = 0; j < width_; ++j) at(row, j) *= inv;
        at(row, col) = 1.0;
        for (int i = 0; i <= m_; ++i) {
            if (i == row) continue;
            double factor = at_const(i, col);
            if (factor == 0.0) continue;
            for (int j = 0; j < width_; ++j) at(i, j) -= factor * at_const(row, j);
            at(i, col) = 0.0;
        }
        basis_[row] = col;
    }

    // Swap zero-valued basic artificials for structural columns. A row with
    // no usable structural coefficient is redundant: its structural entries
    // are all ~0, so later pivots cannot move its artificial off zero.
    void drive_out_artificials() {
        for (int i = 0; i < m_; ++i) {
            if (basis_[i] < n_) continue;
            int best = -1;
            double best_mag = opts_.pivot_tol;
            for (int j = 0; j < n_; ++j) {
                double mag = std::fabs(at_const(i, j));
                if (mag > best_mag) {
                    best_mag = mag;
                    best = j;
                }
            }
            if (best >= 0) {
                pivot(i, best);
                ++iterations;
            }
        }
    }

    void iterate(bool allow_artificial_entering) {
        int limit = allow_artificial_entering ? n_ + m_ : n_;
        int cap = opts_.max_iterations > 0 ? opts_.max_iterations : 200 * (m_ + n_) + 20000;
        int degenerate_streak = 0;
        for (;;) {
            if (iterations >= cap)
                throw SolverError("simplex iteration cap " + std::to_string(cap) + " exceeded");
            bool bland = degenerate_streak >= opts_.bland_after;
            int enter = pick_entering(bland, limit);
            if (enter < 0) return;  // optimal
            int leave = pick_leaving(enter);
            if (leave < 0)
                throw SolverError("simplex: unbounded direction in column " +
                                  std::to_string(enter));
            bool degenerate = rhs_const(leave) <= opts_.feas_tol;
            pivot(leave, enter);
            ++iterations;
            degenerate_streak = degenerate ? degenerate_streak + 1 : 0;
        }
    }

    int m_, n_, width_;
    Options opts_;
    std::vector<double> t_;
    std::vector<int> basis_;
    int pricing_block_ = 0;
};

}  // namespace

Solution solve(const std::vector<double>& a, int n_rows, int n_cols,
               const std::vector<double>& b, const std::vector<double>& c, const Options& opts) {
    if (static_cast<int>(b.size()) != n_rows || static_cast<int>(c.size()) != n_cols ||
        static_cast<std::size_t>(n_rows) * n_cols != a.size())
        throw SolverError("simplex: inconsistent problem dimensions");

    Tableau tab(a, n_rows, n_cols, b, opts);
    Solution sol;
    if (!tab.phase1()) {
        sol.status = Status::Infeasible;
        sol.iterations = tab.iterations;
        return sol;
    }
    tab.phase2(c);
    sol.status = Status::Optimal;
    sol.x = tab.extract_x();
    sol.objective = 0.0;
    for (int j = 0; j < n_cols; ++j) sol.objective += c[j] * sol.x[j];
    sol.iterations = tab.iterations;
    return sol;
}

}  // namespace polylab::lp
