#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "conoma/rate_engine.hpp"

namespace conoma {

/// One synthetic cell for randomized property checks: raw coefficients in the
/// ranges the default room produces, plus the power budget and QoS floor.
struct CellInstance {
    double strong_coef = 0.0;
    double weak_coef = 0.0;
    double cell_power = 0.0;
    double target_rate = 0.0;
    double relay_rate = 0.0;
    double vlc_bandwidth = 20e6;

    CellCoefficients coefficients() const {
        return CellCoefficients::single_cell(strong_coef, weak_coef, relay_rate,
                                             vlc_bandwidth);
    }
};

/// Generators are deterministic in the engine state. The _feasible variants
/// redraw until the respective QoS window is nonempty; eta_interior also
/// forces the equal-rate split strictly inside the hybrid window.
CellInstance random_cell_instance(std::mt19937_64& rng);
CellInstance random_direct_feasible(std::mt19937_64& rng);
CellInstance random_hybrid_feasible(std::mt19937_64& rng);
CellInstance random_eta_interior(std::mt19937_64& rng);

struct PropertyResult {
    std::string name;
    bool pass = false;
    double worst = 0.0;  // worst observed deviation (property-specific units)
    std::string detail;
};

struct ValidateOptions {
    std::uint64_t seed = 20240601;
    std::size_t instances = 300;
    std::size_t grid_points = 20001;
    unsigned threads = 0;
};

// Individual property suites (shared by the validate CLI command and the
// acceptance tests; tolerances are fixed here, instance counts by the caller).
PropertyResult check_direct_case_optimality(const ValidateOptions& options);
PropertyResult check_hybrid_case_flatness(const ValidateOptions& options);
PropertyResult check_slope_sign(const ValidateOptions& options);
PropertyResult check_equal_rate_split(const ValidateOptions& options);
PropertyResult check_window_boundaries(const ValidateOptions& options);
PropertyResult check_cell_selection_vs_oracle(const ValidateOptions& options);

/// All of the above in a fixed order.
std::vector<PropertyResult> run_validation(const ValidateOptions& options);

}  // namespace conoma
