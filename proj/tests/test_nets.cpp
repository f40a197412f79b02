#include "doctest.h"

#include <cmath>
#include <sstream>

#include "polylab/errors.hpp"
#include "polylab/interp_norm.hpp"
#include "polylab/nets.hpp"

using namespace polylab;

TEST_CASE("ball net with rho equal to the ball radius is the center alone") {
    rng::SeededStream s(40, 0);
    auto net = nets::greedy_net(nets::Body::ball(5, 0.3), 0.3, 2000, s);
    CHECK(net.points.size() == 1);
    CHECK(net.points[0] == std::vector<double>(5, 0.0));
    CHECK(net.radius_measured <= 0.3);
}

TEST_CASE("unit circle cover at rho=0.5 takes 7..13 points") {
    rng::SeededStream s(41, 0);
    // L_1 polar in R^2 is the Euclidean disk, so the boundary is the circle.
    auto net = nets::greedy_net(nets::Body::dual_sphere(2, 1.0), 0.5, 4000, s);
    CHECK(net.points.size() >= 7);
    CHECK(net.points.size() <= 13);
    CHECK(net.radius_measured <= 0.5 * 1.05);
}

TEST_CASE("rho >= 2 covers the polar boundary with one point") {
    rng::SeededStream s(42, 0);
    auto net = nets::greedy_net(nets::Body::dual_sphere(3, 2.0), 2.0, 1000, s);
    CHECK(net.points.size() == 1);
}

TEST_CASE("net points satisfy their body's membership equation") {
    rng::SeededStream s(43, 0);
    auto net = nets::greedy_net(nets::Body::dual_sphere(4, 3.0), 0.4, 3000, s);
    interp::InterpolationIndex idx(4, 3.0);
    for (const auto& p : net.points)
        CHECK(interp::dual_gauge_exact(p, idx) == doctest::Approx(1.0).epsilon(1e-9));

    auto ball = nets::greedy_net(nets::Body::ball(3, 0.2), 0.05, 3000, s);
    for (const auto& p : ball.points) {
        double norm = 0.0;
        for (double v : p) norm += v * v;
        CHECK(std::sqrt(norm) <= 0.2 + 1e-12);
    }
}

TEST_CASE("projection returns the exact point when it is in the net") {
    rng::SeededStream s(44, 0);
    auto net = nets::greedy_net(nets::Body::dual_sphere(3, 2.0), 0.5, 2000, s);
    auto [idx0, d0] = nets::project_to_net(net, net.points[2]);
    CHECK(idx0 == 2);
    CHECK(d0 == 0.0);

    // fresh boundary points project within the target radius
    interp::InterpolationIndex idx(3, 2.0);
    int violations = 0;
    for (int k = 0; k < 10000; ++k) {
        auto z = nets::sample_body_point(net.body, s);
        auto [j, d] = nets::project_to_net(net, z);
        (void)j;
        if (d > net.radius_target) ++violations;
        CHECK(d <= net.radius_target * 1.05);
    }
    CHECK(violations <= 10);  // <= 0.1%
}

TEST_CASE("greedy determinism: identical stream, identical net") {
    rng::SeededStream s1(45, 3), s2(45, 3);
    auto n1 = nets::greedy_net(nets::Body::dual_sphere(3, 1.0), 0.6, 1500, s1);
    auto n2 = nets::greedy_net(nets::Body::dual_sphere(3, 1.0), 0.6, 1500, s2);
    REQUIRE(n1.points.size() == n2.points.size());
    for (std::size_t i = 0; i < n1.points.size(); ++i) CHECK(n1.points[i] == n2.points[i]);
}

TEST_CASE("point cap aborts with the achieved radius in the message") {
    rng::SeededStream s(46, 0);
    CHECK_THROWS_AS(nets::greedy_net(nets::Body::dual_sphere(4, 2.0), 0.05, 4000, s,
                                     /*max_points=*/3),
                    InvariantError);
}

TEST_CASE("net text round-trip") {
    rng::SeededStream s(47, 0);
    auto net = nets::greedy_net(nets::Body::dual_sphere(3, 2.0), 0.5, 1000, s);
    std::stringstream ss;
    nets::save_net(net, ss);
    auto loaded = nets::load_net(ss);
    CHECK(loaded.body.n == 3);
    CHECK(loaded.body.r == 2.0);
    CHECK(loaded.radius_target == net.radius_target);
    CHECK(loaded.radius_measured == net.radius_measured);
    REQUIRE(loaded.points.size() == net.points.size());
    for (std::size_t i = 0; i < net.points.size(); ++i) CHECK(loaded.points[i] == net.points[i]);
}
