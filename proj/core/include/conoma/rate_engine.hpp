#pragma once

#include <cstdint>
#include <vector>

#include "conoma/scenario.hpp"

namespace conoma {

/// QoS comparisons allow this relative slack so that closed-form solutions
/// sitting exactly on a rate-floor boundary are not flipped infeasible by the
/// last-ulp rounding of exp2/log2 round trips.
inline constexpr double kQosRelSlack = 1e-9;

inline bool meets_target(double rate, double target) {
    return rate >= target * (1.0 - kQosRelSlack);
}

/// Decision variables of the network problem: per-AP transmit power, the
/// per-cell power split between the strong and weak user's messages, and the
/// per-cell relay bit (0 = weak user served by direct VLC, 1 = served via the
/// strong user over the hybrid VLC/RF link).
struct PowerState {
    std::vector<double> ap_power;      // total transmit power per AP
    std::vector<double> strong_power;  // share carrying the strong user's message
    std::vector<double> weak_power;    // share carrying the weak user's message
    std::vector<std::uint8_t> use_relay;

    std::size_t n_cells() const { return ap_power.size(); }
};

/// Per-cell derived quantities the closed-form solver consumes. For cell k:
///   strong_noise_intf = B_v*N_v + const * sum_{q != k} p_q * g_sq^2  (resp. weak)
///   strong_sinr_coef  = const * g_sk^2 / strong_noise_intf           (resp. weak)
/// where const = bound_const * elec_to_opt^2 * responsivity^2, so that
/// sinr_coef * P is the post-SIC SINR contributed by signal power P.
/// rf_relay_rate is the harvested-power RF backhaul rate and does not depend
/// on the transmit powers.
struct CellCoefficients {
    double bound_const = 0.0;  // constant of the intensity-channel capacity lower bound
    double vlc_bandwidth = 0.0;
    std::vector<double> strong_noise_intf;
    std::vector<double> weak_noise_intf;
    std::vector<double> strong_sinr_coef;
    std::vector<double> weak_sinr_coef;
    std::vector<double> rf_relay_rate;

    std::size_t n_cells() const { return strong_sinr_coef.size(); }

    /// One synthetic cell from raw coefficients; used by randomized property
    /// checks that do not need a full scenario behind the coefficients.
    static CellCoefficients single_cell(double strong_coef, double weak_coef,
                                        double relay_rate, double vlc_bandwidth);
};

/// All per-user rates of one configuration plus the per-cell QoS verdicts.
/// weak_rate is the served rate after link selection:
/// (1-x)*direct + x*min(decode-at-strong, RF backhaul).
struct RateReport {
    std::vector<double> strong_rate;
    std::vector<double> weak_direct_rate;
    std::vector<double> weak_at_strong_rate;
    std::vector<double> weak_hybrid_rate;
    std::vector<double> weak_rate;
    std::vector<double> rf_relay_rate;
    std::vector<std::uint8_t> feasible;
    double sum_rate = 0.0;
    double jain = 1.0;

    bool all_feasible() const;
};

/// Constant of the capacity lower bound: min(1/(2*pi*e), e*b^2 / (2*pi*I_H^2)).
/// Throws std::invalid_argument unless 0 < dc_bias < max_led_current.
double capacity_bound_const(double dc_bias, double max_led_current);

/// Derives all CellCoefficients for the given AP power vector.
CellCoefficients compute_coefficients(const NetworkScenario& scenario,
                                      const std::vector<double>& ap_power);

/// (B_v/2) * log2(1 + strong_coef * strong_power); the strong user decodes and
/// cancels its cell's weak-user signal first, so only inter-cell interference
/// remains in the coefficient.
double rate_strong(const CellCoefficients& coef, double strong_power, std::size_t cell);

/// Weak user served directly by its AP; the strong user's signal is intra-cell
/// interference: (B_v/2) * log2(1 + wc*Pw / (1 + wc*Ps)).
double rate_weak_direct(const CellCoefficients& coef, double strong_power,
                        double weak_power, std::size_t cell);

/// Rate at which the strong user decodes the weak user's message (same shape
/// as rate_weak_direct with the strong user's coefficient).
double rate_weak_at_strong(const CellCoefficients& coef, double strong_power,
                           double weak_power, std::size_t cell);

/// Hybrid VLC/RF serving: min(rate_weak_at_strong, rf_relay_rate).
double rate_weak_hybrid(const CellCoefficients& coef, double strong_power,
                        double weak_power, std::size_t cell);

/// d/dPs of [rate_strong(Ps) + rate_weak_direct(Ps, p - Ps)]; its sign equals
/// the sign of strong_coef - weak_coef everywhere.
double direct_pair_slope(const CellCoefficients& coef, double strong_power, std::size_t cell);

/// Full report for a configuration. Infeasibility is reported per cell, never
/// thrown: feasible[k] requires both QoS floors and the power-split invariants
/// (0 <= Ps <= Pw, Ps+Pw <= p_k <= (I_H-b)^2) within tolerance.
RateReport evaluate(const NetworkScenario& scenario, const PowerState& state,
                    double target_rate);

/// Jain fairness index (sum r)^2 / (n * sum r^2). Returns 1 for an empty or
/// all-zero rate vector (everyone equal).
double jain_index(const std::vector<double>& rates);

}  // namespace conoma
