#include "conoma/channel.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <random>
#include <stdexcept>

namespace conoma {

namespace {

// Deterministic uniform in [0, 1) with 53-bit resolution. Not
// std::uniform_real_distribution, whose output is implementation-defined;
// placements must reproduce bit-exactly everywhere.
double next_unit(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

}  // namespace

double vlc_channel_gain(const Vec3& ap_pos, const Vec3& user_pos,
                        const PhysicalParams& params) {
    const double d = distance(ap_pos, user_pos);
    if (d <= 0.0) {
        throw std::invalid_argument("vlc_channel_gain: degenerate geometry (zero distance)");
    }
    // AP faces straight down, receiver straight up: both the irradiance and
    // the incidence angle are measured against the vertical drop.
    const double drop = ap_pos.z - user_pos.z;
    const double cos_angle = drop / d;
    if (cos_angle <= 0.0) {
        return 0.0;  // receiver above or level with the AP: outside any FOV
    }
    if (cos_angle < std::cos(params.fov_half_angle)) {
        return 0.0;  // outside the receiver field of view
    }
    const double m = params.lambertian_order;
    const double base = (m + 1.0) * params.pd_area / (2.0 * std::numbers::pi * d * d);
    return base * std::pow(cos_angle, m) * params.optical_filter_gain *
           params.concentrator_gain * cos_angle;
}

double rf_channel_gain(const Vec3& pos_a, const Vec3& pos_b,
                       const PhysicalParams& params) {
    const double d = distance(pos_a, pos_b);
    if (d <= 0.0) {
        throw std::invalid_argument("rf_channel_gain: degenerate geometry (zero distance)");
    }
    const double loss_db =
        params.rf_ref_loss_db + 10.0 * params.rf_path_loss_exponent * std::log10(d);
    return std::pow(10.0, -loss_db / 20.0);  // amplitude gain: h^2 carries the full loss
}

double harvested_rf_power(const NetworkScenario& scenario, std::size_t cell) {
    if (cell >= scenario.n_cells()) {
        throw std::out_of_range("harvested_rf_power: cell index out of range");
    }
    const PhysicalParams& p = scenario.params;
    double gain_sum = 0.0;
    for (double g : scenario.vlc_gain_strong[cell]) {
        gain_sum += g;
    }
    const double dc_current = p.responsivity * p.elec_to_opt * p.dc_bias * gain_sum;
    if (dc_current <= 0.0) {
        return 0.0;
    }
    return p.eh_fill_factor * dc_current * p.eh_thermal_voltage *
           std::log1p(dc_current / p.eh_dark_current);
}

UserPlacement place_users(const std::vector<Vec3>& ap_positions, double alpha,
                          std::uint64_t seed, const PlacementOptions& options) {
    if (!(alpha >= 0.0 && alpha < 1.0)) {
        throw std::invalid_argument("place_users: alpha must be in [0, 1)");
    }
    if (ap_positions.empty()) {
        throw std::invalid_argument("place_users: no AP positions");
    }
    double radius = options.cell_radius;
    if (radius <= 0.0) {
        if (ap_positions.size() < 2) {
            throw std::invalid_argument(
                "place_users: cell_radius required for a single-AP layout");
        }
        double min_spacing = std::numeric_limits<double>::infinity();
        for (std::size_t i = 0; i < ap_positions.size(); ++i) {
            for (std::size_t j = i + 1; j < ap_positions.size(); ++j) {
                min_spacing = std::min(min_spacing,
                                       horizontal_distance(ap_positions[i], ap_positions[j]));
            }
        }
        radius = 0.5 * min_spacing;
    }

    std::mt19937_64 rng(seed);
    UserPlacement placement;
    placement.strong.reserve(ap_positions.size());
    placement.weak.reserve(ap_positions.size());
    const double two_pi = 2.0 * std::numbers::pi;
    for (const Vec3& ap : ap_positions) {
        // Area-uniform draws: r = sqrt(a^2 + u*(b^2 - a^2)).
        const double r_strong =
            options.strong_disc_fraction * radius * std::sqrt(next_unit(rng));
        const double phi_strong = two_pi * next_unit(rng);
        const double inner = alpha * radius;
        const double r_weak = std::sqrt(inner * inner +
                                        next_unit(rng) * (radius * radius - inner * inner));
        const double phi_weak = two_pi * next_unit(rng);
        placement.strong.push_back({ap.x + r_strong * std::cos(phi_strong),
                                    ap.y + r_strong * std::sin(phi_strong),
                                    options.rx_height});
        placement.weak.push_back({ap.x + r_weak * std::cos(phi_weak),
                                  ap.y + r_weak * std::sin(phi_weak),
                                  options.rx_height});
    }
    return placement;
}

}  // namespace conoma
