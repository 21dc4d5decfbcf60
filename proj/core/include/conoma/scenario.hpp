#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "conoma/geometry.hpp"
#include "conoma/params.hpp"

namespace conoma {

/// Immutable input of one optimization problem: geometry, channel gains and
/// physical constants for a network of N single-AP cells, each serving one
/// strong (cell-center) and one weak (cell-edge) user.
///
/// Gain matrices are indexed [user_cell][ap]: vlc_gain_strong[k][q] is the
/// VLC channel gain from AP q to the strong user of cell k.
struct NetworkScenario {
    PhysicalParams params;
    std::vector<Vec3> ap_positions;
    std::vector<Vec3> strong_user_positions;
    std::vector<Vec3> weak_user_positions;
    std::vector<std::vector<double>> vlc_gain_strong;
    std::vector<std::vector<double>> vlc_gain_weak;
    std::vector<double> rf_gain;  // strong<->weak RF amplitude gain, per cell

    std::size_t n_cells() const { return ap_positions.size(); }

    /// Checks shapes, gain nonnegativity and the strong-label consistency
    /// vlc_gain_strong[k][k] >= vlc_gain_weak[k][k]. Throws std::invalid_argument.
    void validate() const;
};

/// Square AP grid on the ceiling of a room; the default experiment layout.
struct RoomGrid {
    int side = 4;                       // side x side APs
    double spacing = 2.5;               // AP separation (m)
    double ap_height = 3.0;             // ceiling height (m)
    double rx_height = 0.85;            // receiver plane height (m)
    double strong_disc_fraction = 0.4;  // strong user stays within this fraction of the cell radius

    std::vector<Vec3> ap_positions() const;
    double cell_radius() const { return 0.5 * spacing; }

    void validate() const;
};

/// Computes both VLC gain matrices, per-cell RF gains, and re-labels each
/// cell's user pair if the "weak" user happens to have the stronger own-AP
/// channel. Throws on invariant violations.
NetworkScenario build_scenario(const PhysicalParams& params,
                               std::vector<Vec3> ap_positions,
                               std::vector<Vec3> strong_user_positions,
                               std::vector<Vec3> weak_user_positions);

/// Drops one user pair per cell (see place_users) on a RoomGrid layout and
/// builds the full scenario. Deterministic in seed.
NetworkScenario make_room_scenario(const RoomGrid& room, const PhysicalParams& params,
                                   double alpha, std::uint64_t seed);

// --- JSON import/export -----------------------------------------------------
//
// The JSON encoding round-trips every double exactly (shortest decimal
// representation that parses back to the same bits), so a scenario consumed
// by two tools is numerically identical in both.

std::string scenario_to_json(const NetworkScenario& scenario);

/// Parses and validates. Parse errors carry "line L, column C" diagnostics;
/// schema errors name the offending key. Throws std::runtime_error /
/// std::invalid_argument.
NetworkScenario scenario_from_json(const std::string& text);

void save_scenario(const NetworkScenario& scenario, const std::string& path);
NetworkScenario load_scenario(const std::string& path);

}  // namespace conoma
