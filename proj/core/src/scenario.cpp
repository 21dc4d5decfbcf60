#include "conoma/scenario.hpp"

#include <cmath>
#include <stdexcept>
#include <utility>

#include "conoma/channel.hpp"

namespace conoma {

void RoomGrid::validate() const {
    if (side < 1) throw std::invalid_argument("room: side must be >= 1");
    if (!(spacing > 0.0)) throw std::invalid_argument("room: spacing must be positive");
    if (!(ap_height > rx_height) || !(rx_height >= 0.0)) {
        throw std::invalid_argument("room: need ap_height > rx_height >= 0");
    }
    if (!(strong_disc_fraction > 0.0 && strong_disc_fraction <= 1.0)) {
        throw std::invalid_argument("room: strong_disc_fraction must be in (0, 1]");
    }
}

std::vector<Vec3> RoomGrid::ap_positions() const {
    std::vector<Vec3> aps;
    aps.reserve(static_cast<std::size_t>(side) * side);
    // Grid centered in a square room of side `side * spacing`.
    const double origin = 0.5 * spacing;
    for (int iy = 0; iy < side; ++iy) {
        for (int ix = 0; ix < side; ++ix) {
            aps.push_back({origin + ix * spacing, origin + iy * spacing, ap_height});
        }
    }
    return aps;
}

void NetworkScenario::validate() const {
    params.validate();
    const std::size_t n = ap_positions.size();
    if (n == 0) throw std::invalid_argument("scenario: no APs");
    if (strong_user_positions.size() != n || weak_user_positions.size() != n) {
        throw std::invalid_argument("scenario: one strong and one weak user per cell required");
    }
    if (vlc_gain_strong.size() != n || vlc_gain_weak.size() != n || rf_gain.size() != n) {
        throw std::invalid_argument("scenario: gain containers must have one row per cell");
    }
    for (std::size_t k = 0; k < n; ++k) {
        if (vlc_gain_strong[k].size() != n || vlc_gain_weak[k].size() != n) {
            throw std::invalid_argument("scenario: gain matrices must be N x N");
        }
        for (std::size_t q = 0; q < n; ++q) {
            if (!(vlc_gain_strong[k][q] >= 0.0) || !(vlc_gain_weak[k][q] >= 0.0)) {
                throw std::invalid_argument("scenario: VLC gains must be nonnegative");
            }
        }
        if (!(rf_gain[k] >= 0.0)) {
            throw std::invalid_argument("scenario: RF gains must be nonnegative");
        }
        if (vlc_gain_strong[k][k] < vlc_gain_weak[k][k]) {
            throw std::invalid_argument(
                "scenario: strong user must have the stronger own-AP channel");
        }
    }
}

NetworkScenario build_scenario(const PhysicalParams& params,
                               std::vector<Vec3> ap_positions,
                               std::vector<Vec3> strong_user_positions,
                               std::vector<Vec3> weak_user_positions) {
    params.validate();
    const std::size_t n = ap_positions.size();
    if (strong_user_positions.size() != n || weak_user_positions.size() != n) {
        throw std::invalid_argument("build_scenario: one user pair per cell required");
    }

    NetworkScenario s;
    s.params = params;
    s.ap_positions = std::move(ap_positions);
    s.strong_user_positions = std::move(strong_user_positions);
    s.weak_user_positions = std::move(weak_user_positions);

    // Re-label pairs whose "weak" user ended up with the better own-AP channel
    // (possible when the weak annulus overlaps the strong disc).
    for (std::size_t k = 0; k < n; ++k) {
        const double g_strong =
            vlc_channel_gain(s.ap_positions[k], s.strong_user_positions[k], params);
        const double g_weak =
            vlc_channel_gain(s.ap_positions[k], s.weak_user_positions[k], params);
        if (g_strong < g_weak) {
            std::swap(s.strong_user_positions[k], s.weak_user_positions[k]);
        }
    }

    s.vlc_gain_strong.assign(n, std::vector<double>(n, 0.0));
    s.vlc_gain_weak.assign(n, std::vector<double>(n, 0.0));
    s.rf_gain.assign(n, 0.0);
    for (std::size_t k = 0; k < n; ++k) {
        for (std::size_t q = 0; q < n; ++q) {
            s.vlc_gain_strong[k][q] =
                vlc_channel_gain(s.ap_positions[q], s.strong_user_positions[k], params);
            s.vlc_gain_weak[k][q] =
                vlc_channel_gain(s.ap_positions[q], s.weak_user_positions[k], params);
        }
        s.rf_gain[k] =
            rf_channel_gain(s.strong_user_positions[k], s.weak_user_positions[k], params);
    }
    s.validate();
    return s;
}

NetworkScenario make_room_scenario(const RoomGrid& room, const PhysicalParams& params,
                                   double alpha, std::uint64_t seed) {
    room.validate();
    const std::vector<Vec3> aps = room.ap_positions();
    PlacementOptions options;
    options.rx_height = room.rx_height;
    options.strong_disc_fraction = room.strong_disc_fraction;
    options.cell_radius = room.cell_radius();
    UserPlacement placement = place_users(aps, alpha, seed, options);
    return build_scenario(params, aps, std::move(placement.strong), std::move(placement.weak));
}

}  // namespace conoma
