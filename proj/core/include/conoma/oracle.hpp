#pragma once

#include <cstdint>
#include <vector>

#include "conoma/cell_solver.hpp"
#include "conoma/network_optimizer.hpp"
#include "conoma/rate_engine.hpp"
#include "conoma/scenario.hpp"

namespace conoma {

/// Grid resolutions for the brute-force reference sweeps. split_points samples
/// the per-cell power split axis [0, p_k/2]; power_points samples each AP
/// power axis [p_min, P_max] (1 collapses the axis to P_max).
struct GridSpec {
    std::size_t split_points = 100000;
    std::size_t power_points = 64;
};

/// Exhaustive sweep over the split grid for both link choices; returns the
/// feasible grid maximizer of the per-cell objective (same selection and
/// tie-break rules as solve_cell). Built only on rate-engine primitives so it
/// stays independent of the closed forms it validates.
CellSolution oracle_cell(const CellCoefficients& coef, double cell_power,
                         double target_rate, std::size_t cell,
                         const GridSpec& grid = {},
                         LinkPolicy policy = LinkPolicy::select);

struct OracleNetworkResult {
    PowerState state;
    RateReport report;
    bool feasible = false;
};

/// Exhaustive sweep over the joint AP power grid (cost power_points^N), each
/// point solved per cell by oracle_cell. Only for toy networks: throws
/// std::invalid_argument for more than 3 cells.
OracleNetworkResult oracle_network(const NetworkScenario& scenario, double target_rate,
                                   const GridSpec& grid = {}, unsigned threads = 0);

}  // namespace conoma
