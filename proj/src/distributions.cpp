#include "polylab/distributions.hpp"

#include <cmath>
#include <sstream>

#include "polylab/errors.hpp"
#include "polylab/special.hpp"

namespace polylab::dist {

namespace {

double student_sd(double dof) { return std::sqrt(dof / (dof - 2.0)); }
double pareto_sd(double shape) { return std::sqrt(shape / (shape - 2.0)); }

// Second point of the two-point mix, fixed by the variance-1 constraint
// p*a^2 + (1-p)*b^2 = 1.
double twopoint_b(double a, double p) { return std::sqrt((1.0 - p * a * a) / (1.0 - p)); }

void validate(const DistributionSpec& s) {
    switch (s.kind) {
        case Kind::StudentT:
            if (!(s.dof > 2.0))
                throw ConfigError("student_t requires dof > 2 for a finite variance");
            break;
        case Kind::ParetoSym:
            if (!(s.shape > 2.0))
                throw ConfigError("pareto requires shape > 2 for a finite variance");
            break;
        case Kind::TwoPointMix:
            if (!(s.a > 0.0)) throw ConfigError("twopoint requires a > 0");
            if (!(s.p > 0.0 && s.p < 1.0)) throw ConfigError("twopoint requires 0 < p < 1");
            if (s.p * s.a * s.a > 1.0)
                throw ConfigError("twopoint requires p*a^2 <= 1 so the variance can be 1");
            break;
        default:
            break;
    }
}

// Marsaglia-Tsang gamma sampler, alpha >= 1.
double sample_gamma(double alpha, rng::SeededStream& stream) {
    double d = alpha - 1.0 / 3.0;
    double c = 1.0 / std::sqrt(9.0 * d);
    for (;;) {
        double x = stream.next_gaussian();
        double v = 1.0 + c * x;
        if (v <= 0.0) continue;
        v = v * v * v;
        double u = stream.next_unit();
        if (u < 1.0 - 0.0331 * x * x * x * x) return d * v;
        if (std::log(u) < 0.5 * x * x + d * (1.0 - v + std::log(v))) return d * v;
    }
}

}  // namespace

DistributionSpec DistributionSpec::make(Kind kind, double param1, double param2) {
    DistributionSpec s;
    s.kind = kind;
    switch (kind) {
        case Kind::StudentT: s.dof = param1; break;
        case Kind::ParetoSym: s.shape = param1; break;
        case Kind::TwoPointMix: s.a = param1; s.p = param2; break;
        default: break;
    }
    validate(s);
    s.kappa = (kind == Kind::TwoPointMix) ? s.a : 1.0;
    s.delta = small_ball_mass(s, s.kappa);
    return s;
}

DistributionSpec DistributionSpec::parse(const std::string& name) {
    auto fail = [&] { throw ConfigError("unknown distribution '" + name + "'"); };
    std::string head = name, args;
    if (auto colon = name.find(':'); colon != std::string::npos) {
        head = name.substr(0, colon);
        args = name.substr(colon + 1);
    }
    try {
        if (head == "gaussian") return make(Kind::Gaussian);
        if (head == "rademacher") return make(Kind::Rademacher);
        if (head == "uniform") return make(Kind::UniformSym);
        if (head == "student_t") return make(Kind::StudentT, std::stod(args));
        if (head == "pareto") return make(Kind::ParetoSym, std::stod(args));
        if (head == "twopoint") {
            double a = 0.0, p = 0.0;
            std::stringstream ss(args);
            std::string tok;
            while (std::getline(ss, tok, ',')) {
                auto eq = tok.find('=');
                if (eq == std::string::npos) fail();
                std::string key = tok.substr(0, eq);
                double val = std::stod(tok.substr(eq + 1));
                if (key == "a") a = val;
                else if (key == "p") p = val;
                else fail();
            }
            return make(Kind::TwoPointMix, a, p);
        }
    } catch (const std::invalid_argument&) {
        fail();
    }
    fail();
    return {};
}

std::string DistributionSpec::name() const {
    std::ostringstream os;
    switch (kind) {
        case Kind::Gaussian: return "gaussian";
        case Kind::Rademacher: return "rademacher";
        case Kind::UniformSym: return "uniform";
        case Kind::StudentT: os << "student_t:" << dof; return os.str();
        case Kind::ParetoSym: os << "pareto:" << shape; return os.str();
        case Kind::TwoPointMix: os << "twopoint:a=" << a << ",p=" << p; return os.str();
    }
    return "?";
}

double sample_scalar(const DistributionSpec& spec, rng::SeededStream& stream) {
    validate(spec);
    switch (spec.kind) {
        case Kind::Gaussian:
            return stream.next_gaussian();
        case Kind::Rademacher:
            return stream.next_sign();
        case Kind::UniformSym:
            // Uniform[-a,a] has variance a^2/3; a = sqrt(3) makes it 1.
            return stream.next_symmetric() * std::sqrt(3.0);
        case Kind::StudentT: {
            double z = stream.next_gaussian();
            double chi2 = 2.0 * sample_gamma(0.5 * spec.dof, stream);
            return z / std::sqrt(chi2 / spec.dof) / student_sd(spec.dof);
        }
        case Kind::ParetoSym: {
            double x = std::pow(stream.next_unit(), -1.0 / spec.shape);
            return stream.next_sign() * x / pareto_sd(spec.shape);
        }
        case Kind::TwoPointMix: {
            double mag = (stream.next_unit() < spec.p) ? spec.a : twopoint_b(spec.a, spec.p);
            return stream.next_sign() * mag;
        }
    }
    throw ConfigError("unreachable distribution kind");
}

SampleMatrix sample_matrix(const DistributionSpec& spec, int n_rows, int n_cols,
                           rng::SeededStream& stream, std::size_t max_entries) {
    if (n_rows < 1 || n_cols < 1) throw ConfigError("sample_matrix requires N >= 1 and n >= 1");
    std::size_t total = static_cast<std::size_t>(n_rows) * static_cast<std::size_t>(n_cols);
    if (total > max_entries) {
        throw ResourceError("sample_matrix: " + std::to_string(total) +
                            " entries exceed the cap of " + std::to_string(max_entries));
    }
    SampleMatrix m(n_rows, n_cols);
    for (std::size_t i = 0; i < total; ++i) m.entries[i] = sample_scalar(spec, stream);
    return m;
}

SmallBallEstimate estimate_small_ball(const DistributionSpec& spec, double kappa, long trials,
                                      rng::SeededStream& stream) {
    if (trials < 100) throw ConfigError("estimate_small_ball needs at least 100 trials");
    long hits = 0;
    for (long i = 0; i < trials; ++i)
        if (std::fabs(sample_scalar(spec, stream)) >= kappa) ++hits;
    SmallBallEstimate est;
    est.trials = trials;
    est.delta_hat = static_cast<double>(hits) / static_cast<double>(trials);
    est.stderr_ = std::sqrt(est.delta_hat * (1.0 - est.delta_hat) / static_cast<double>(trials));
    return est;
}

double small_ball_mass(const DistributionSpec& spec, double kappa) {
    validate(spec);
    if (kappa <= 0.0) return 1.0;
    switch (spec.kind) {
        case Kind::Gaussian:
            return special::normal_two_sided_tail(kappa);
        case Kind::Rademacher:
            return kappa <= 1.0 ? 1.0 : 0.0;
        case Kind::UniformSym:
            return kappa >= std::sqrt(3.0) ? 0.0 : 1.0 - kappa / std::sqrt(3.0);
        case Kind::StudentT:
            return special::student_t_two_sided_tail(spec.dof, kappa * student_sd(spec.dof));
        case Kind::ParetoSym: {
            double t = kappa * pareto_sd(spec.shape);
            return t <= 1.0 ? 1.0 : std::pow(t, -spec.shape);
        }
        case Kind::TwoPointMix: {
            double b = twopoint_b(spec.a, spec.p);
            double mass = 0.0;
            if (spec.a >= kappa) mass += spec.p;
            if (b >= kappa) mass += 1.0 - spec.p;
            return mass;
        }
    }
    return 0.0;
}

}  // namespace polylab::dist
