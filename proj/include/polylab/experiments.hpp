#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "polylab/distributions.hpp"
#include "polylab/nets.hpp"
#include "polylab/polytope.hpp"

// Monte Carlo campaigns, one per probabilistic step of the containment
// argument: the L1 lower bound, its Paley-Zygmund consequence, the
// individual tail, the cardinality bound, the oscillation term, the
// containment minimum, and the end-to-end union bookkeeping.
//
// Every campaign draws randomness through (seed, stream) substreams keyed by
// purpose and item index, accumulates into per-item slots, and reduces in
// index order, so reports are bit-identical for any worker count.

namespace polylab::exp {

struct Thresholds {
    double c_prime = 0.25;  // individual-tail level c'
    double c0 = 0.02;       // containment level
};

struct ExperimentConfig {
    dist::DistributionSpec dist;
    int n = 16;
    int N = 256;
    double alpha = 0.5;
    int r = 0;             // 0 -> floor(r_scale * log(e N / n)), clamped to [1, n]
    double r_scale = 1.0;
    Thresholds thresholds;
    long trials = 10000;
    std::uint64_t seed = 1;
    double theta = 0.5;    // Paley-Zygmund parameter
    double rho = 0.01;     // oscillation ball radius
    double net_rho = 0.25; // covering radius for dual-sphere nets
    int workers = 0;       // 0 -> POLYLAB_WORKERS or hardware
    long net_probes = 20000;

    void validate() const;
    int effective_r() const;
    // 2 N^{1-alpha} n^alpha and N^{1-alpha} n^alpha
    double cardinality_threshold() const;
    double oscillation_threshold() const;
};

// Substream purposes; the high byte of the stream index.
enum class Stream : std::uint64_t {
    Trial = 1,
    Matrix = 2,
    Direction = 3,
    NetProbe = 4,
    TailProbe = 5,
    Boundary = 6,
};
std::uint64_t stream_id(Stream purpose, std::uint64_t index);

// ---------------------------------------------------------------------------
// L1 lower bound (E|Y| >= c(kappa,delta) ||z_J||_2)

struct L1LowerResult {
    double ratio = 0.0;     // mean |Y| / ||z_J||_2
    double stderr_ = 0.0;   // of the ratio
    long trials = 0;
    bool cauchy_schwarz_ok = false;  // ratio <= 1 + 3 stderr
};
L1LowerResult exp_l1_lower(const ExperimentConfig& cfg, std::span<const double> z,
                           std::span<const int> j_set);

// Paley-Zygmund: Pr(|Y| >= theta E|Y|) >= (1-theta^2) (E|Y|)^2 / E Y^2,
// sides estimated on independent halves.
struct PaleyZygmundResult {
    double lhs = 0.0, lhs_stderr = 0.0;
    double rhs = 0.0, rhs_stderr = 0.0;
    double theta = 0.5;
    long trials = 0;
    bool holds = false;  // lhs >= rhs - 3 (se_lhs + se_rhs)
};
PaleyZygmundResult exp_paley_zygmund(const ExperimentConfig& cfg, std::span<const double> z,
                                     std::span<const int> j_set);

// ---------------------------------------------------------------------------
// Individual tail Pr(|<z,X>| >= c') for z on the polar boundary

enum class ZMode { Flat, Basis, RandomDualSphere };
std::string zmode_name(ZMode mode);

struct TailPoint {
    double r = 0.0;
    long hits = 0;
    double p_hat = 0.0;
    double stderr_ = 0.0;
    bool underpowered = false;  // zero hits; p bounded by rule of three
};

struct TailCurve {
    ZMode mode = ZMode::Flat;
    double c_prime = 0.0;
    long trials = 0;
    std::vector<TailPoint> points;
    // least-squares line -log p_hat ~ a r + b over all powered points
    double fit_a = 0.0, fit_b = 0.0;
    // the same slope restricted to the top half of the r grid ("large r")
    double fit_a_top = 0.0;
    // smallest b making a r + b an upper envelope of -log p_hat
    double envelope_b = 0.0;
    bool fit_finite = false;
};
TailCurve exp_individual_tail(const ExperimentConfig& cfg, ZMode mode,
                              const std::vector<double>& r_values);

// ---------------------------------------------------------------------------
// Cardinality of large coordinates over matrix draws

struct CardinalityResult {
    int r = 0;
    double r0_fitted = 0.0;      // largest grid r with p_hat(r) >= 4 (n/N)^alpha
    double threshold = 0.0;      // 2 N^(1-alpha) n^alpha
    std::vector<long> counts;    // per draw
    double frequency = 0.0;      // empirical Pr(count >= threshold)
    double predicted = 0.0;      // binomial-model prediction
    double p_ref = 0.0;          // per-row hit probability used by the model
    double mean_count = 0.0;
    bool mean_ok = false;        // |mean - N p| <= 3 sqrt(N p (1-p))
    bool frequency_ok = false;   // |freq - predicted| <= 3 stderr + model tol
};
CardinalityResult exp_cardinality(const ExperimentConfig& cfg);

// ---------------------------------------------------------------------------
// Oscillation Q = sup_{u in rho B_2} #{i : |<u,X_i>| >= c'/2}

struct OscillationResult {
    double rho = 0.0;
    double level = 0.0;          // c'/2
    double threshold = 0.0;      // N^(1-alpha) n^alpha
    std::vector<long> q_hat;     // per draw, sampled sup (lower bound)
    double fraction_within = 0.0;  // Pr(Q <= threshold)
    long candidates = 0;
};
OscillationResult exp_oscillation(const ExperimentConfig& cfg, const nets::Net& ball_net);

// ---------------------------------------------------------------------------
// Containment: c_hat = min ||Gamma z||_inf over sampled boundary directions

struct ContainmentDraw {
    double c_hat = 0.0;
    std::string argmin_kind;      // axis | flat | gaussian | singular
    double c_certified = -1.0;    // only when the certified cross-check ran
    bool consistent = true;       // |c_hat - c_certified| within the eps slack
};

struct ContainmentResult {
    int r = 0;
    long directions = 0;
    std::vector<ContainmentDraw> draws;
    double success_rate = 0.0;    // Pr(c_hat >= c0)
    double min_c_hat = 0.0;
    double mean_c_hat = 0.0;
    bool certified_checked = false;
    bool certified_consistent = true;
    long membership_checked = 0;  // boundary points validated by the gauge LP
    long membership_failures = 0;
};
ContainmentResult exp_containment(const ExperimentConfig& cfg, long directions);

// ---------------------------------------------------------------------------
// End-to-end union bookkeeping on fresh directions

struct EndToEndResult {
    double threshold = 0.0;        // N^(1-alpha) n^alpha
    long draws = 0;
    long directions_per_draw = 0;
    long net_size = 0;
    long antecedent_held = 0;      // (net count >= 2T) and (osc count <= T)
    long implication_violations = 0;  // must stay 0
    long triangle_violations = 0;     // direct >= net - osc, checked always
    long cover_misses = 0;         // fresh direction farther than rho from net
    double min_direct_over_held = 0.0;
};
EndToEndResult exp_end_to_end(const ExperimentConfig& cfg, const nets::Net& net,
                              long directions_per_draw);

// ---------------------------------------------------------------------------
// Norm-calculus sweeps backing the norms/partition/gauge subcommands

struct NormsSample {
    int n = 0, r = 0, profile = 0;
    double exact = 0.0, holmstedt = 0.0, ratio = 0.0;
};
struct NormsResult {
    std::vector<NormsSample> samples;
    double max_ratio = 0.0;
    bool sandwich_ok = false;  // every ratio in [1, 3]
};
NormsResult run_norms_campaign(const ExperimentConfig& cfg, long samples,
                               const std::vector<int>& r_grid = {});

struct PartitionSample {
    int n = 0, r = 0, profile = 0;
    double exact = 0.0, block_sum = 0.0, ratio = 0.0;
    bool lower_ok = false, upper_ok = false;
};
struct PartitionResult {
    std::vector<PartitionSample> samples;
    double min_ratio = 0.0;
    bool all_ok = false;
    long random_partitions_checked = 0;
    long random_partition_failures = 0;
};
PartitionResult run_partition_campaign(const ExperimentConfig& cfg, long samples,
                                       long random_partitions_per_sample = 0);

enum class Fixture { None, Identity, Crosspolytope };
Fixture fixture_from_name(const std::string& name);

struct GaugeSample {
    double gauge = 0.0;
    double reference = -1.0;  // closed form when the fixture has one
    bool feasible = true;
    double cert_residual = 0.0;
};
struct GaugeResultSummary {
    std::vector<GaugeSample> samples;
    bool all_match = true;  // |gauge - reference| <= 1e-9 where reference exists
    double max_error = 0.0;
};
GaugeResultSummary run_gauge_campaign(const ExperimentConfig& cfg, Fixture fixture, long samples,
                                      const std::optional<std::vector<double>>& fixed_v);

// Test-profile generator shared by the sweeps: 0 gaussian, 1 sparse,
// 2 geometric decay.
std::vector<double> make_profile(int n, int profile, rng::SeededStream& stream);

// Builds the SampleMatrix for a fixture (Identity -> I, Crosspolytope -> [I;-I]).
SampleMatrix fixture_matrix(Fixture fixture, int n);

}  // namespace polylab::exp
