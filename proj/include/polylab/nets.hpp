#pragma once

#include <iosfwd>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "polylab/interp_norm.hpp"
#include "polylab/rng.hpp"

// rho-covers (in l2) of the polar boundary and of small Euclidean balls,
// built by farthest-point greedy over a probe cloud. The measured covering
// radius against fresh probes ships with the net so downstream certificates
// stay sound even when the greedy cover is imperfect.

namespace polylab::nets {

enum class BodyKind { DualSphere, Ball };

struct Body {
    BodyKind kind = BodyKind::DualSphere;
    int n = 1;
    double r = 1.0;     // DualSphere: interpolation parameter
    double rho = 1.0;   // Ball: radius

    static Body dual_sphere(int n, double r) { return {BodyKind::DualSphere, n, r, 0.0}; }
    static Body ball(int n, double rho) { return {BodyKind::Ball, n, 1.0, rho}; }
};

struct Net {
    Body body;
    std::vector<std::vector<double>> points;
    double radius_target = 0.0;
    double radius_measured = 0.0;
};

// One probe of the body. DualSphere probes mix Gaussian directions with the
// l1-extreme and flat directions before normalizing to the boundary.
std::vector<double> sample_body_point(const Body& body, rng::SeededStream& stream,
                                      long mix_index = -1);

// Farthest-point greedy until every probe is within rho of the net. Throws
// ConfigError on bad parameters; throws InvariantError (with the achieved
// radius) if max_points > 0 and the cap is hit before coverage.
Net greedy_net(const Body& body, double rho, long probe_budget, rng::SeededStream& stream,
               long max_points = 0);

// Nearest net point (index into net.points) and its distance.
std::pair<int, double> project_to_net(const Net& net, std::span<const double> z);

// Text round-trip: '#'-prefixed metadata lines, then one point per line.
void save_net(const Net& net, std::ostream& os);
Net load_net(std::istream& is);
void save_net_file(const Net& net, const std::string& path);
Net load_net_file(const std::string& path);

}  // namespace polylab::nets
