#include "doctest.h"

#include <cmath>
#include <vector>

#include "oracles.hpp"
#include "polylab/distributions.hpp"
#include "polylab/errors.hpp"
#include "polylab/polytope.hpp"
#include "polylab/rng.hpp"

using namespace polylab;

namespace {

SampleMatrix identity_fixture(int n) {
    SampleMatrix g(n, n);
    for (int i = 0; i < n; ++i) g.at(i, i) = 1.0;
    return g;
}

// [I; -I]: K is exactly the cross-polytope B_1^n.
SampleMatrix crosspolytope_fixture(int n) {
    SampleMatrix g(2 * n, n);
    for (int i = 0; i < n; ++i) {
        g.at(i, i) = 1.0;
        g.at(n + i, i) = -1.0;
    }
    return g;
}

}  // namespace

TEST_CASE("support seminorm fixtures") {
    auto id = identity_fixture(4);
    std::vector<double> z{0.25, -2.0, 1.0, 0.5};
    CHECK(polytope::support_seminorm(id, z) == doctest::Approx(2.0));

    SampleMatrix g(2, 2);
    g.at(0, 0) = 1.0;            // e1
    g.at(1, 0) = 1.0;
    g.at(1, 1) = 1.0;            // e1 + e2
    std::vector<double> e2{0.0, 1.0};
    CHECK(polytope::support_seminorm(g, e2) == doctest::Approx(1.0));

    auto cross = crosspolytope_fixture(3);
    std::vector<double> w{0.3, -0.9, 0.4};
    CHECK(polytope::support_seminorm(cross, w) == doctest::Approx(0.9));

    CHECK_THROWS_AS(polytope::support_seminorm(id, e2), ConfigError);
}

TEST_CASE("gauge LP: origin, vertices, cross-polytope closed form") {
    auto cross = crosspolytope_fixture(5);

    std::vector<double> zero(5, 0.0);
    auto res = polytope::gauge_lp(cross, zero);
    CHECK(res.status == polytope::GaugeStatus::Optimal);
    CHECK(res.value == 0.0);

    std::vector<double> x1{1.0, 0.0, 0.0, 0.0, 0.0};
    res = polytope::gauge_lp(cross, x1);
    CHECK(res.value <= 1.0 + 1e-9);

    rng::SeededStream s(30, 0);
    for (int rep = 0; rep < 50; ++rep) {
        std::vector<double> v(5);
        double l1 = 0.0;
        for (auto& vi : v) {
            vi = s.next_gaussian();
            l1 += std::fabs(vi);
        }
        res = polytope::gauge_lp(cross, v);
        REQUIRE(res.status == polytope::GaugeStatus::Optimal);
        CHECK(res.value == doctest::Approx(l1).epsilon(1e-9));

        // certificate reproduces v within the declared tolerance
        std::vector<double> recon(5, 0.0);
        for (int i = 0; i < cross.rows; ++i)
            for (int j = 0; j < 5; ++j) recon[j] += res.certificate[i] * cross.at(i, j);
        double vmax = 0.0, err = 0.0, cert_l1 = 0.0;
        for (int j = 0; j < 5; ++j) {
            vmax = std::max(vmax, std::fabs(v[j]));
            err = std::max(err, std::fabs(recon[j] - v[j]));
        }
        for (double t : res.certificate) cert_l1 += std::fabs(t);
        CHECK(err <= 1e-8 * (1.0 + vmax));
        CHECK(cert_l1 == doctest::Approx(res.value).epsilon(1e-8));
    }
}

TEST_CASE("gauge LP detects vectors outside the row span") {
    SampleMatrix g(2, 3);  // rows e1, e2 only
    g.at(0, 0) = 1.0;
    g.at(1, 1) = 1.0;
    std::vector<double> v{0.0, 0.0, 1.0};
    auto res = polytope::gauge_lp(g, v);
    CHECK(res.status == polytope::GaugeStatus::Infeasible);
    CHECK(std::isinf(res.value));
}

TEST_CASE("gauge LP matches support-enumeration brute force on random instances") {
    rng::SeededStream s(31, 0);
    auto spec = dist::DistributionSpec::parse("gaussian");
    for (int rep = 0; rep < 60; ++rep) {
        int n = 1 + static_cast<int>(s.next_u64() % 4);
        int big_n = n + static_cast<int>(s.next_u64() % 8);
        auto g = dist::sample_matrix(spec, big_n, n, s);
        std::vector<double> v(n);
        for (auto& vi : v) vi = s.next_gaussian();

        auto res = polytope::gauge_lp(g, v);
        REQUIRE(res.status == polytope::GaugeStatus::Optimal);
        double brute = oracles::l1_gauge_bruteforce(g, v);
        CHECK(res.value == doctest::Approx(brute).epsilon(1e-7));
    }
}

TEST_CASE("gauge of every generating row is at most 1") {
    rng::SeededStream s(32, 0);
    auto spec = dist::DistributionSpec::parse("uniform");
    for (int rep = 0; rep < 10; ++rep) {
        auto g = dist::sample_matrix(spec, 12, 4, s);
        for (int i = 0; i < g.rows; ++i) {
            std::vector<double> xi(g.row(i), g.row(i) + g.cols);
            auto res = polytope::gauge_lp(g, xi);
            REQUIRE(res.status == polytope::GaugeStatus::Optimal);
            CHECK(res.value <= 1.0 + 1e-9);
        }
    }
}

TEST_CASE("gauge homogeneity and weak duality against sampled directions") {
    rng::SeededStream s(33, 0);
    auto spec = dist::DistributionSpec::parse("gaussian");
    auto g = dist::sample_matrix(spec, 20, 5, s);
    for (int rep = 0; rep < 20; ++rep) {
        std::vector<double> v(5), scaled(5);
        for (auto& vi : v) vi = s.next_gaussian();
        double lam = 0.2 + 4.0 * s.next_unit();
        for (int j = 0; j < 5; ++j) scaled[j] = lam * v[j];
        auto rv = polytope::gauge_lp(g, v);
        auto rs = polytope::gauge_lp(g, scaled);
        REQUIRE(rv.status == polytope::GaugeStatus::Optimal);
        CHECK(rs.value == doctest::Approx(lam * rv.value).epsilon(1e-9));

        // weak duality: gamma_K(v) >= <v,z> whenever ||Gamma z||_inf <= 1
        for (int k = 0; k < 50; ++k) {
            std::vector<double> dir(5);
            for (auto& d : dir) d = s.next_gaussian();
            double h = polytope::support_seminorm(g, dir);
            if (h == 0.0) continue;
            double ip = 0.0;
            for (int j = 0; j < 5; ++j) ip += v[j] * dir[j] / h;
            CHECK(rv.value >= ip - 1e-6 * (1.0 + std::fabs(ip)));
        }
    }
}

TEST_CASE("membership on the cross-polytope boundary") {
    auto cross = crosspolytope_fixture(4);
    std::vector<double> e1{1.0, 0.0, 0.0, 0.0};
    CHECK(polytope::membership(cross, e1, 1.0));
    std::vector<double> outside{1.0001, 0.0, 0.0, 0.0};
    CHECK_FALSE(polytope::membership(cross, outside, 1.0));
    std::vector<double> zero(4, 0.0);
    CHECK(polytope::membership(cross, zero, 0.5));

    // X1 + X2 is in 2K by the obvious certificate
    rng::SeededStream s(34, 0);
    auto g = dist::sample_matrix(dist::DistributionSpec::parse("gaussian"), 8, 3, s);
    std::vector<double> v(3);
    for (int j = 0; j < 3; ++j) v[j] = g.at(0, j) + g.at(1, j);
    CHECK(polytope::membership(g, v, 2.0));
}

TEST_CASE("count_large_coords basics and monotonicity") {
    auto id = identity_fixture(3);
    std::vector<double> e1{1.0, 0.0, 0.0};
    CHECK(polytope::count_large_coords(id, e1, 0.5) == 1);

    auto cross = crosspolytope_fixture(3);
    CHECK(polytope::count_large_coords(cross, e1, 0.5) == 2);

    rng::SeededStream s(35, 0);
    auto g = dist::sample_matrix(dist::DistributionSpec::parse("gaussian"), 50, 4, s);
    std::vector<double> z(4);
    for (auto& v : z) v = s.next_gaussian();
    double sup = polytope::support_seminorm(g, z);
    CHECK(polytope::count_large_coords(g, z, sup * 1.0001) == 0);
    long prev = g.rows + 1;
    for (double thr : {0.1, 0.5, 1.0, 2.0, 4.0}) {
        long c = polytope::count_large_coords(g, z, thr);
        CHECK(c <= prev);
        prev = c;
    }
}

TEST_CASE("certified containment formula and scaling") {
    auto cross = crosspolytope_fixture(3);
    interp::InterpolationIndex idx(3, 2.0);

    // one-point net: the flat direction
    std::vector<double> flat(3, 1.0 / std::sqrt(6.0));
    std::vector<std::vector<double>> net{flat};
    auto cert = polytope::certified_containment(cross, idx, net, 0.05);
    CHECK(cert.lipschitz == doctest::Approx(1.0));
    CHECK(cert.net_min == doctest::Approx(1.0 / std::sqrt(6.0)).epsilon(1e-12));
    CHECK(cert.c_certified == doctest::Approx(1.0 / std::sqrt(6.0) - 0.05).epsilon(1e-12));

    // doubling Gamma doubles both terms
    SampleMatrix doubled = cross;
    for (auto& e : doubled.entries) e *= 2.0;
    auto cert2 = polytope::certified_containment(doubled, idx, net, 0.05);
    CHECK(cert2.net_min == doctest::Approx(2.0 * cert.net_min).epsilon(1e-12));
    CHECK(cert2.c_certified ==
          doctest::Approx(2.0 * cert.net_min - 0.05 * 2.0).epsilon(1e-12));

    CHECK_THROWS_AS(polytope::certified_containment(cross, idx, {}, 0.1), ConfigError);
    std::vector<std::vector<double>> bad{{1.0, 1.0, 1.0}};  // gauge sqrt(6) != 1
    CHECK_THROWS_AS(polytope::certified_containment(cross, idx, bad, 0.1), ConfigError);
}
