#include "doctest.h"

#include <cmath>

#include "polylab/special.hpp"

using namespace polylab::special;

// Reference values computed with scipy.stats / scipy.special.
TEST_CASE("normal cdf and two-sided tail") {
    CHECK(normal_cdf(0.0) == doctest::Approx(0.5).epsilon(1e-15));
    CHECK(normal_two_sided_tail(1.0) == doctest::Approx(0.31731050786291415).epsilon(1e-12));
    CHECK(normal_two_sided_tail(0.5) == doctest::Approx(0.61707507745197376).epsilon(1e-12));
    CHECK(normal_two_sided_tail(0.0) == doctest::Approx(1.0));
}

TEST_CASE("regularized incomplete beta vs scipy") {
    CHECK(incomplete_beta(0.5, 0.5, 0.3) == doctest::Approx(0.36901011956554536).epsilon(1e-12));
    CHECK(incomplete_beta(2, 3, 0.5) == doctest::Approx(0.6875).epsilon(1e-12));
    CHECK(incomplete_beta(1.5, 0.5, 0.9) == doctest::Approx(0.60418130359059208).epsilon(1e-12));
    CHECK(incomplete_beta(5, 1, 0.2) == doctest::Approx(0.00032).epsilon(1e-10));
    CHECK(incomplete_beta(0.5, 2.5, 0.05) == doctest::Approx(0.37018812880753565).epsilon(1e-12));
    CHECK(incomplete_beta(8, 8, 0.5) == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(incomplete_beta(2, 2, 0.0) == 0.0);
    CHECK(incomplete_beta(2, 2, 1.0) == 1.0);
}

TEST_CASE("student-t two-sided tail vs scipy") {
    CHECK(student_t_two_sided_tail(3, std::sqrt(3.0)) ==
          doctest::Approx(0.18169011381620923).epsilon(1e-12));
    CHECK(student_t_two_sided_tail(5, std::sqrt(5.0 / 3.0)) ==
          doctest::Approx(0.25316999510032273).epsilon(1e-12));
    CHECK(student_t_two_sided_tail(10, 0.0) == 1.0);
}

TEST_CASE("binomial tail basics") {
    CHECK(binomial_tail_ge(10, 0.5, 0) == 1.0);
    CHECK(binomial_tail_ge(10, 0.5, 11) == 0.0);
    // Pr(B(4, 1/2) >= 2) = 11/16
    CHECK(binomial_tail_ge(4, 0.5, 2) == doctest::Approx(11.0 / 16.0).epsilon(1e-12));
    // Pr(B(3, 0.3) >= 1) = 1 - 0.7^3
    CHECK(binomial_tail_ge(3, 0.3, 1) == doctest::Approx(1.0 - 0.343).epsilon(1e-12));
}

TEST_CASE("rademacher |sum| tail by hand enumeration") {
    // n=3: |S| in {1,3}; Pr(|S| >= 3) = 2/8, Pr(|S| >= 1) = 1
    CHECK(rademacher_abs_sum_tail(3, 3.0) == doctest::Approx(0.25));
    CHECK(rademacher_abs_sum_tail(3, 0.5) == doctest::Approx(1.0));
    CHECK(rademacher_abs_sum_tail(3, 1.0) == doctest::Approx(1.0));
    CHECK(rademacher_abs_sum_tail(3, 3.5) == doctest::Approx(0.0));
    // n=4: Pr(|S| >= 2) = 1 - C(4,2)/16 = 1 - 6/16
    CHECK(rademacher_abs_sum_tail(4, 2.0) == doctest::Approx(10.0 / 16.0));
}
