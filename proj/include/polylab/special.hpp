#pragma once

// Closed-form probability helpers used for analytic small-ball constants and
// for the binomial/Gaussian predictions the campaigns are checked against.

namespace polylab::special {

// Standard normal CDF.
double normal_cdf(double x);
// Two-sided tail Pr(|N(0,1)| >= x) = 2(1 - Phi(x)) for x >= 0.
double normal_two_sided_tail(double x);

// Regularized incomplete beta I_x(a, b), 0 <= x <= 1.
double incomplete_beta(double a, double b, double x);

// Two-sided Student-t tail Pr(|T_nu| >= t), t >= 0.
double student_t_two_sided_tail(double nu, double t);

// Pr(Binomial(n, p) >= k).
double binomial_tail_ge(long n, double p, long k);

// Exact Pr(|sum_{i=1}^n eps_i| >= t) for iid signs, via Pascal recursion.
// Exact in double arithmetic for n <= 50.
double rademacher_abs_sum_tail(int n, double t);

}  // namespace polylab::special
