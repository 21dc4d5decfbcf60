#pragma once

#include <cstdint>
#include <vector>

#include "conoma/geometry.hpp"
#include "conoma/params.hpp"
#include "conoma/scenario.hpp"

namespace conoma {

/// Lambertian line-of-sight VLC channel gain from a downward-facing AP to an
/// upward-facing receiver. Zero outside the receiver field of view.
/// Throws std::invalid_argument on coincident positions ("degenerate geometry").
double vlc_channel_gain(const Vec3& ap_pos, const Vec3& user_pos, const PhysicalParams& params);

/// Log-distance RF amplitude gain h, with h^2 = 10^-((L0 + 10*gamma*log10 d)/10).
/// Throws std::invalid_argument on coincident positions.
double rf_channel_gain(const Vec3& pos_a, const Vec3& pos_b, const PhysicalParams& params);

/// Power harvested by the strong user of `cell` from the DC light of all APs:
/// P = fill * I_dc * V_t * ln(1 + I_dc / I_dark), with
/// I_dc = responsivity * elec_to_opt * dc_bias * sum_q gain(strong_k, q).
double harvested_rf_power(const NetworkScenario& scenario, std::size_t cell);

struct PlacementOptions {
    double rx_height = 0.85;
    double strong_disc_fraction = 0.4;
    /// Cell radius; 0 means "derive as half the minimum AP spacing"
    /// (requires at least two APs).
    double cell_radius = 0.0;
};

struct UserPlacement {
    std::vector<Vec3> strong;
    std::vector<Vec3> weak;
};

/// Drops one strong user uniformly on the central disc (radius
/// strong_disc_fraction * R_cell) and one weak user uniformly on the annulus
/// [alpha * R_cell, R_cell] of every cell. alpha in [0, 1) pushes weak users
/// toward the cell edge. Deterministic in seed; the uniform draws use a fixed
/// mt19937_64-based generator so results are identical across platforms.
/// Throws std::invalid_argument for alpha outside [0, 1).
UserPlacement place_users(const std::vector<Vec3>& ap_positions, double alpha,
                          std::uint64_t seed, const PlacementOptions& options = {});

}  // namespace conoma
