#pragma once

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <vector>

#include "conoma/cell_solver.hpp"
#include "conoma/rate_engine.hpp"
#include "conoma/scenario.hpp"

namespace conoma {

struct OptimizerConfig {
    double epsilon = 1e-3;  // golden-section bracket tolerance, in power units
    int max_rounds = 3;     // full passes over all APs
    double theta = 1.618;   // golden ratio constant used by the bracketing updates
    bool track_history = true;
    /// Keep the shrunk bracket across rounds (upper end = current power) or
    /// restart every visit from the full power budget.
    bool reset_bracket_each_round = false;
    LinkPolicy link_policy = LinkPolicy::select;
};

struct TraceRecord {
    std::size_t iteration = 0;  // AP-update counter; 0 is the initial full-power solve
    int ap = -1;                // AP whose power was optimized this step (-1 initial)
    double ap_power = 0.0;      // that AP's power after the accept/reject decision
    double sum_rate = 0.0;      // network sum-rate of the accepted configuration
    bool feasible = false;      // all cells met QoS and power constraints
};

/// Per-update history plus instrumentation counters. The accepted sum-rate
/// sequence is nondecreasing whenever the run stays feasible: a candidate is
/// only accepted when the network objective does not decrease.
struct ConvergenceTrace {
    std::vector<TraceRecord> records;
    int rounds_completed = 0;
    int stable_round = 0;  // first round in which no AP moved by more than epsilon; 0 = none
    std::size_t golden_section_iterations = 0;
    std::size_t probe_evaluations = 0;  // inside golden section: exactly 2 per iteration
    std::size_t total_evaluations = 0;  // probes + initialization + acceptance checks
};

/// Smallest AP power that can satisfy both QoS floors of `cell` under the
/// current interference state, capped at power_cap:
/// min(cap, (A^2 - A)/strong_coef + (A - 1)/weak_coef), A = 2^(2*target/B_v).
double min_power_for_qos(const CellCoefficients& coef, double target_rate,
                         std::size_t cell, double power_cap);

/// Cells ordered from the most to the least interfering AP; the score of AP k
/// is p_k * sum of squared VLC gains toward every user outside cell k.
/// Ties break on the lower index.
std::vector<std::size_t> interference_rank(const NetworkScenario& scenario,
                                           const std::vector<double>& ap_power);

struct GoldenSectionStats {
    std::size_t iterations = 0;  // each costs exactly two objective evaluations
};

/// Golden-section line search for a maximizer of `objective` on [lo, hi],
/// shrinking until hi - lo <= epsilon and returning the final bracket
/// midpoint. Within epsilon of the maximizer for unimodal objectives; for
/// anything else the caller must guard acceptance itself (see optimize).
/// Throws std::invalid_argument if lo > hi or epsilon <= 0.
double golden_section(const std::function<double(double)>& objective, double lo,
                      double hi, double epsilon, GoldenSectionStats* stats = nullptr,
                      double theta = 1.618);

struct FixedPowerSolution {
    PowerState state;
    RateReport report;
};

/// Per-cell closed-form solve of the whole network at a fixed AP power vector.
FixedPowerSolution solve_at_fixed_power(const NetworkScenario& scenario,
                                        const std::vector<double>& ap_power,
                                        double target_rate,
                                        LinkPolicy policy = LinkPolicy::select);

struct OptimizeResult {
    PowerState state;
    RateReport report;
    ConvergenceTrace trace;
};

/// Joint power allocation and link selection:
///   1. solve all cells at full power,
///   2. per round, visit APs from most to least interfering; golden-section
///      each AP's power over [min_power_for_qos, current power], scoring each
///      probe by re-solving every cell (fully infeasible configurations score
///      -inf),
///   3. accept the candidate only if the network objective does not decrease,
///   4. stop when a full round moves no AP by more than epsilon, or after
///      max_rounds.
/// If the final state is infeasible but a feasible configuration was seen
/// anywhere, that best feasible configuration is returned instead.
OptimizeResult optimize(const NetworkScenario& scenario, double target_rate,
                        const OptimizerConfig& config = {});

/// CSV with header "iteration,ap,p_k,sum_rate" (RFC 4180 line endings).
void write_trace_csv(const ConvergenceTrace& trace, std::ostream& out);

}  // namespace conoma
