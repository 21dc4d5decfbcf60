#pragma once

#include <cstdint>
#include <vector>

#include "conoma/rate_engine.hpp"

namespace conoma {

/// Whether the per-cell solver may pick the hybrid VLC/RF link or is pinned to
/// direct VLC serving (the non-cooperative baseline).
enum class LinkPolicy {
    select,       // choose the better of direct and hybrid per cell
    direct_only,  // weak users always served by direct VLC
};

/// Closed-form solution of one cell's power split at fixed AP power p_k.
/// The total budget is always spent: weak_power = p_k - strong_power.
/// When the QoS window is empty the solution is flagged infeasible and carries
/// a best-effort split so the outer loop can still compare objectives.
struct CellSolution {
    double strong_power = 0.0;
    double weak_power = 0.0;
    bool use_relay = false;
    double objective = 0.0;  // strong rate + served weak rate at this split
    bool feasible = false;
    double strong_rate = 0.0;
    double weak_rate = 0.0;  // served weak rate (direct or hybrid per use_relay)
};

/// Boundary values of the per-cell QoS windows, all in units of strong_power:
///   strong_qos_floor    smallest Ps with strong rate >= target (direct & hybrid)
///   weak_qos_ceiling    largest Ps keeping the direct weak rate >= target,
///                       capped at p_k/2
///   hybrid_floor        max(strong_qos_floor, smallest Ps with
///                       decode-at-strong rate <= RF backhaul rate)
///   relay_qos_ceiling   largest Ps keeping the decode-at-strong rate >= target,
///                       capped at p_k/2
///   equal_rate_split    Ps equalizing the strong rate and the decode-at-strong
///                       rate; always in [0, p_k/2]
struct CaseBounds {
    double strong_qos_floor = 0.0;
    double weak_qos_ceiling = 0.0;
    double hybrid_floor = 0.0;
    double relay_qos_ceiling = 0.0;
    double equal_rate_split = 0.0;
};

CaseBounds case_bounds(const CellCoefficients& coef, double cell_power,
                       double target_rate, std::size_t cell);

/// Direct-VLC case. The objective is monotone in the split (sign of
/// strong_coef - weak_coef), so the optimum sits on the QoS window boundary:
/// the floor when the weak channel dominates, the ceiling otherwise, the floor
/// on exact ties. Feasible iff the window is nonempty.
CellSolution solve_case_direct(const CellCoefficients& coef, double cell_power,
                               double target_rate, std::size_t cell);

/// Hybrid-relay case. The objective is constant over the feasible window, so
/// any point in [hybrid_floor, relay_qos_ceiling] is optimal; the split is the
/// equal-rate point clamped into the window, which maximizes fairness for free.
CellSolution solve_case_hybrid(const CellCoefficients& coef, double cell_power,
                               double target_rate, std::size_t cell);

/// Runs both cases and keeps the feasible one with the larger objective;
/// prefers direct on ties (no relay burden). If neither case is feasible,
/// returns the one with the larger min(strong rate, weak rate), flagged.
CellSolution solve_cell(const CellCoefficients& coef, double cell_power,
                        double target_rate, std::size_t cell,
                        LinkPolicy policy = LinkPolicy::select);

}  // namespace conoma
