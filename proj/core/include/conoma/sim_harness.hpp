#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "conoma/network_optimizer.hpp"
#include "conoma/scenario.hpp"

namespace conoma {

/// The four evaluated schemes: cooperative NOMA (per-cell link selection) or
/// plain NOMA (direct VLC only), each with and without the outer transmit-power
/// optimization.
enum class Scheme {
    conoma_opt,
    conoma_fixed,
    noma_opt,
    noma_fixed,
};

Scheme scheme_from_name(std::string_view name);  // throws on unknown names
std::string_view scheme_name(Scheme scheme);

enum class SweepAxis {
    target_rate,  // "rth"
    alpha,        // "alpha"
};

SweepAxis axis_from_name(std::string_view name);
std::string_view axis_name(SweepAxis axis);

struct ExperimentConfig {
    Scheme scheme = Scheme::conoma_opt;
    SweepAxis axis = SweepAxis::target_rate;
    std::vector<double> sweep_values;
    int drops = 200;
    std::uint64_t base_seed = 1;
    double target_rate = 1e6;  // fixed QoS floor while sweeping alpha
    double alpha = 0.5;        // fixed placement parameter while sweeping rth
    RoomGrid room;
    PhysicalParams params;
    OptimizerConfig optimizer;
    unsigned threads = 0;  // 0 = hardware concurrency

    void validate() const;  // throws std::invalid_argument
};

/// One Monte-Carlo drop: user placement seeded with base_seed + drop index,
/// solved under the configured scheme.
struct DropRecord {
    std::uint64_t seed = 0;
    double sum_rate = 0.0;
    double jain = 0.0;
    double relay_fraction = 0.0;  // share of cells served over the hybrid link
    bool feasible = false;        // every cell met QoS and power constraints
};

struct SweepPointResult {
    double sweep_value = 0.0;
    double mean_sum_rate = 0.0;
    double mean_jain = 0.0;
    double mean_relay_fraction = 0.0;
    double infeasible_fraction = 0.0;
    double ci_half_width = 0.0;  // 95% normal-approximation CI of mean_sum_rate
    std::vector<DropRecord> drops;
};

struct ExperimentResult {
    Scheme scheme = Scheme::conoma_opt;
    SweepAxis axis = SweepAxis::target_rate;
    std::vector<SweepPointResult> points;
};

/// Runs drops in parallel and aggregates in fixed drop order, so results are
/// bit-stable regardless of thread count. Deterministic given the config.
ExperimentResult run_experiment(const ExperimentConfig& config);

struct SchemeDelta {
    double sweep_value = 0.0;
    Scheme scheme;
    double sum_rate_delta = 0.0;  // scheme mean minus baseline mean
    double jain_delta = 0.0;
};

struct DominanceViolation {
    Scheme winner;  // scheme expected to dominate
    Scheme loser;
    double sweep_value = 0.0;
    int drop = 0;
    double winner_sum_rate = 0.0;
    double loser_sum_rate = 0.0;
};

struct SchemeComparison {
    Scheme baseline;
    std::vector<SchemeDelta> deltas;
    std::vector<DominanceViolation> violations;
};

/// Aligns results over a common sweep, reports per-point deltas against the
/// first scheme, and flags every drop violating a structural dominance
/// expectation (conoma-opt >= conoma-fixed always; conoma-fixed >= noma-fixed
/// when both drops are feasible). Throws std::invalid_argument on an empty or
/// misaligned input.
SchemeComparison compare_schemes(const std::vector<ExperimentResult>& results);

/// Convergence trace of the power optimizer on one seeded drop (for the
/// convergence figure export).
ConvergenceTrace trace_one_drop(const ExperimentConfig& config, double alpha,
                                std::uint64_t seed);

}  // namespace conoma
