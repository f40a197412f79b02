#include "polylab/nets.hpp"

#include <cmath>
#include <fstream>
#include <limits>
#include <sstream>

#include "polylab/errors.hpp"

namespace polylab::nets {

namespace {

double dist2(std::span<const double> a, std::span<const double> b) {
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        double d = a[i] - b[i];
        s += d * d;
    }
    return s;
}

}  // namespace

std::vector<double> sample_body_point(const Body& body, rng::SeededStream& stream,
                                      long mix_index) {
    int n = body.n;
    if (body.kind == BodyKind::Ball) {
        // Uniform in rho*B_2^n: Gaussian direction, radius rho * U^(1/n).
        std::vector<double> u(n);
        double norm_sq = 0.0;
        for (int i = 0; i < n; ++i) {
            u[i] = stream.next_gaussian();
            norm_sq += u[i] * u[i];
        }
        double norm = std::sqrt(norm_sq);
        double radius = body.rho * std::pow(stream.next_unit(), 1.0 / n);
        if (norm == 0.0) return std::vector<double>(n, 0.0);
        for (double& v : u) v *= radius / norm;
        return u;
    }

    interp::InterpolationIndex idx(n, body.r);
    // Structured directions first: +-e_i, then the flat direction; they are
    // the known extremal directions of the containment problem.
    if (mix_index >= 0 && mix_index < 2 * n) {
        std::vector<double> z(n, 0.0);
        z[static_cast<int>(mix_index) / 2] = (mix_index % 2 == 0) ? 1.0 : -1.0;
        return interp::normalize_to_dual_sphere(z, idx);
    }
    if (mix_index == 2 * n) {
        std::vector<double> z(n, 1.0);
        return interp::normalize_to_dual_sphere(z, idx);
    }
    std::vector<double> z(n);
    double norm_sq = 0.0;
    for (int i = 0; i < n; ++i) {
        z[i] = stream.next_gaussian();
        norm_sq += z[i] * z[i];
    }
    if (norm_sq == 0.0) {
        z.assign(n, 0.0);
        z[0] = 1.0;
    }
    return interp::normalize_to_dual_sphere(z, idx);
}

Net greedy_net(const Body& body, double rho, long probe_budget, rng::SeededStream& stream,
               long max_points) {
    if (rho <= 0.0) throw ConfigError("greedy_net: rho must be positive");
    if (probe_budget < 1) throw ConfigError("greedy_net: probe budget must be >= 1");

    std::vector<std::vector<double>> probes;
    probes.reserve(probe_budget);
    for (long i = 0; i < probe_budget; ++i) probes.push_back(sample_body_point(body, stream, i));

    Net net;
    net.body = body;
    net.radius_target = rho;

    // Seed a Ball net at the center (it covers the whole body once rho
    // reaches the ball radius); seed a DualSphere net at the flat direction
    // when the probe budget reaches it.
    if (body.kind == BodyKind::Ball) {
        net.points.emplace_back(body.n, 0.0);
    } else if (probe_budget > 2 * body.n) {
        net.points.push_back(probes[static_cast<std::size_t>(2 * body.n)]);
    } else {
        net.points.push_back(probes[0]);
    }

    std::vector<double> nearest_sq(probes.size());
    for (std::size_t i = 0; i < probes.size(); ++i)
        nearest_sq[i] = dist2(probes[i], net.points[0]);

    double rho_sq = rho * rho;
    for (;;) {
        std::size_t far_idx = 0;
        double far_sq = -1.0;
        for (std::size_t i = 0; i < probes.size(); ++i) {
            if (nearest_sq[i] > far_sq) {
                far_sq = nearest_sq[i];
                far_idx = i;
            }
        }
        if (far_sq <= rho_sq) break;
        if (max_points > 0 && static_cast<long>(net.points.size()) >= max_points)
            throw InvariantError("greedy_net: point cap " + std::to_string(max_points) +
                                 " reached at covering radius " + std::to_string(std::sqrt(far_sq)));
        net.points.push_back(probes[far_idx]);
        const auto& added = net.points.back();
        for (std::size_t i = 0; i < probes.size(); ++i)
            nearest_sq[i] = std::min(nearest_sq[i], dist2(probes[i], added));
    }

    // Measured radius against a fresh probe set from the same stream.
    double measured_sq = 0.0;
    for (long i = 0; i < probe_budget; ++i) {
        auto probe = sample_body_point(body, stream, i);
        double best = std::numeric_limits<double>::infinity();
        for (const auto& p : net.points) best = std::min(best, dist2(probe, p));
        measured_sq = std::max(measured_sq, best);
    }
    net.radius_measured = std::sqrt(measured_sq);
    return net;
}

std::pair<int, double> project_to_net(const Net& net, std::span<const double> z) {
    if (net.points.empty()) throw ConfigError("project_to_net: empty net");
    if (net.points[0].size() != z.size()) throw ConfigError("project_to_net: dimension mismatch");
    int best = 0;
    double best_sq = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < net.points.size(); ++i) {
        double d = dist2(net.points[i], z);
        if (d < best_sq) {
            best_sq = d;
            best = static_cast<int>(i);
        }
    }
    return {best, std::sqrt(best_sq)};
}

void save_net(const Net& net, std::ostream& os) {
    char buf[32];
    os << "# polylab-net v1\n";
    os << "# body " << (net.body.kind == BodyKind::DualSphere ? "dual_sphere" : "ball") << "\n";
    os << "# n " << net.body.n << "\n";
    auto fmt = [&buf](double v) {
        std::snprintf(buf, sizeof buf, "%.17g", v);
        return std::string(buf);
    };
    os << "# r " << fmt(net.body.r) << "\n";
    os << "# rho " << fmt(net.body.rho) << "\n";
    os << "# radius_target " << fmt(net.radius_target) << "\n";
    os << "# radius_measured " << fmt(net.radius_measured) << "\n";
    for (const auto& p : net.points) {
        for (std::size_t j = 0; j < p.size(); ++j) {
            if (j) os << ' ';
            os << fmt(p[j]);
        }
        os << '\n';
    }
}

Net load_net(std::istream& is) {
    Net net;
    std::string line;
    while (std::getline(is, line)) {
        if (line.empty()) continue;
        if (line[0] == '#') {
            std::istringstream ls(line.substr(1));
            std::string key;
            ls >> key;
            if (key == "body") {
                std::string kind;
                ls >> kind;
                net.body.kind = kind == "ball" ? BodyKind::Ball : BodyKind::DualSphere;
            } else if (key == "n") ls >> net.body.n;
            else if (key == "r") ls >> net.body.r;
            else if (key == "rho") ls >> net.body.rho;
            else if (key == "radius_target") ls >> net.radius_target;
            else if (key == "radius_measured") ls >> net.radius_measured;
            continue;
        }
        std::istringstream ls(line);
        std::vector<double> p;
        double v;
        while (ls >> v) p.push_back(v);
        if (!p.empty()) net.points.push_back(std::move(p));
    }
    if (net.points.empty()) throw ConfigError("load_net: no points found");
    return net;
}

void save_net_file(const Net& net, const std::string& path) {
    std::ofstream os(path);
    if (!os) throw ConfigError("cannot open " + path + " for writing");
    save_net(net, os);
}

Net load_net_file(const std::string& path) {
    std::ifstream is(path);
    if (!is) throw ConfigError("cannot open " + path);
    return load_net(is);
}

}  // namespace polylab::nets
