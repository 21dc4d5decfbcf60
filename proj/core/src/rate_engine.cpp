#include "conoma/rate_engine.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "conoma/channel.hpp"

namespace conoma {

namespace {

constexpr double kInvLn2 = 1.4426950408889634074;  // 1 / ln 2

// log2(1 + x) through log1p; keeps full precision at tiny SINR.
double log2_1p(double x) {
    return std::log1p(x) * kInvLn2;
}

}  // namespace

double capacity_bound_const(double dc_bias, double max_led_current) {
    if (!(dc_bias > 0.0) || !(dc_bias < max_led_current)) {
        throw std::invalid_argument(
            "capacity_bound_const: need 0 < dc_bias < max_led_current");
    }
    const double pi = std::numbers::pi;
    const double e = std::numbers::e;
    const double uniform_term = 1.0 / (2.0 * pi * e);
    const double bias_term =
        e * dc_bias * dc_bias / (max_led_current * max_led_current * 2.0 * pi);
    return std::min(uniform_term, bias_term);
}

CellCoefficients CellCoefficients::single_cell(double strong_coef, double weak_coef,
                                               double relay_rate, double vlc_bandwidth) {
    CellCoefficients coef;
    coef.bound_const = 1.0 / (2.0 * std::numbers::pi * std::numbers::e);
    coef.vlc_bandwidth = vlc_bandwidth;
    coef.strong_noise_intf = {1.0};
    coef.weak_noise_intf = {1.0};
    coef.strong_sinr_coef = {strong_coef};
    coef.weak_sinr_coef = {weak_coef};
    coef.rf_relay_rate = {relay_rate};
    return coef;
}

CellCoefficients compute_coefficients(const NetworkScenario& scenario,
                                      const std::vector<double>& ap_power) {
    const std::size_t n = scenario.n_cells();
    if (ap_power.size() != n) {
        throw std::invalid_argument("compute_coefficients: power vector length mismatch");
    }
    const PhysicalParams& p = scenario.params;

    CellCoefficients coef;
    coef.bound_const = capacity_bound_const(p.dc_bias, p.max_led_current);
    coef.vlc_bandwidth = p.vlc_bandwidth;
    coef.strong_noise_intf.resize(n);
    coef.weak_noise_intf.resize(n);
    coef.strong_sinr_coef.resize(n);
    coef.weak_sinr_coef.resize(n);
    coef.rf_relay_rate.resize(n);

    const double conv = coef.bound_const * p.elec_to_opt * p.elec_to_opt *
                        p.responsivity * p.responsivity;
    const double noise_floor = p.vlc_bandwidth * p.vlc_noise_psd;
    const double rf_noise = p.rf_bandwidth * p.rf_noise_psd;

    for (std::size_t k = 0; k < n; ++k) {
        double intf_strong = 0.0;
        double intf_weak = 0.0;
        for (std::size_t q = 0; q < n; ++q) {
            if (q == k) continue;
            const double gs = scenario.vlc_gain_strong[k][q];
            const double gw = scenario.vlc_gain_weak[k][q];
            intf_strong += ap_power[q] * gs * gs;
            intf_weak += ap_power[q] * gw * gw;
        }
        coef.strong_noise_intf[k] = noise_floor + conv * intf_strong;
        coef.weak_noise_intf[k] = noise_floor + conv * intf_weak;

        const double gs_own = scenario.vlc_gain_strong[k][k];
        const double gw_own = scenario.vlc_gain_weak[k][k];
        coef.strong_sinr_coef[k] = conv * gs_own * gs_own / coef.strong_noise_intf[k];
        coef.weak_sinr_coef[k] = conv * gw_own * gw_own / coef.weak_noise_intf[k];

        const double harvested = harvested_rf_power(scenario, k);
        const double rf_snr = harvested * scenario.rf_gain[k] * scenario.rf_gain[k] / rf_noise;
        coef.rf_relay_rate[k] = p.rf_bandwidth * log2_1p(rf_snr);
    }
    return coef;
}

double rate_strong(const CellCoefficients& coef, double strong_power, std::size_t cell) {
    return 0.5 * coef.vlc_bandwidth *
           log2_1p(coef.strong_sinr_coef[cell] * strong_power);
}

double rate_weak_direct(const CellCoefficients& coef, double strong_power,
                        double weak_power, std::size_t cell) {
    const double wc = coef.weak_sinr_coef[cell];
    return 0.5 * coef.vlc_bandwidth *
           log2_1p(wc * weak_power / (1.0 + wc * strong_power));
}

double rate_weak_at_strong(const CellCoefficients& coef, double strong_power,
                           double weak_power, std::size_t cell) {
    const double sc = coef.strong_sinr_coef[cell];
    return 0.5 * coef.vlc_bandwidth *
           log2_1p(sc * weak_power / (1.0 + sc * strong_power));
}

double rate_weak_hybrid(const CellCoefficients& coef, double strong_power,
                        double weak_power, std::size_t cell) {
    return std::min(rate_weak_at_strong(coef, strong_power, weak_power, cell),
                    coef.rf_relay_rate[cell]);
}

double direct_pair_slope(const CellCoefficients& coef, double strong_power,
                         std::size_t cell) {
    const double sc = coef.strong_sinr_coef[cell];
    const double wc = coef.weak_sinr_coef[cell];
    const double strong_term = sc > 0.0 ? 1.0 / (1.0 / sc + strong_power) : 0.0;
    const double weak_term = wc > 0.0 ? 1.0 / (1.0 / wc + strong_power) : 0.0;
    return 0.5 * coef.vlc_bandwidth * kInvLn2 * (strong_term - weak_term);
}

double jain_index(const std::vector<double>& rates) {
    if (rates.empty()) {
        return 1.0;
    }
    double sum = 0.0;
    double sum_sq = 0.0;
    for (double r : rates) {
        sum += r;
        sum_sq += r * r;
    }
    if (sum_sq == 0.0) {
        return 1.0;  // all-zero rates: everyone equal
    }
    return sum * sum / (static_cast<double>(rates.size()) * sum_sq);
}

bool RateReport::all_feasible() const {
    return std::all_of(feasible.begin(), feasible.end(),
                       [](std::uint8_t f) { return f != 0; });
}

namespace {

constexpr double kPowerRelSlack = 1e-12;

bool power_split_ok(double ap_power, double strong_power, double weak_power,
                    double power_cap) {
    if (!(strong_power >= 0.0) || !(weak_power >= 0.0)) return false;
    if (strong_power > weak_power * (1.0 + kPowerRelSlack)) return false;
    if (strong_power + weak_power > ap_power * (1.0 + kPowerRelSlack)) return false;
    if (ap_power > power_cap * (1.0 + kPowerRelSlack)) return false;
    return true;
}

}  // namespace

RateReport evaluate(const NetworkScenario& scenario, const PowerState& state,
                    double target_rate) {
    const std::size_t n = scenario.n_cells();
    if (state.ap_power.size() != n || state.strong_power.size() != n ||
        state.weak_power.size() != n || state.use_relay.size() != n) {
        throw std::invalid_argument("evaluate: state dimensions do not match the scenario");
    }
    const CellCoefficients coef = compute_coefficients(scenario, state.ap_power);
    const double power_cap = max_transmit_power(scenario.params);

    RateReport report;
    report.strong_rate.resize(n);
    report.weak_direct_rate.resize(n);
    report.weak_at_strong_rate.resize(n);
    report.weak_hybrid_rate.resize(n);
    report.weak_rate.resize(n);
    report.rf_relay_rate = coef.rf_relay_rate;
    report.feasible.resize(n);

    std::vector<double> user_rates;
    user_rates.reserve(2 * n);
    double sum = 0.0;
    for (std::size_t k = 0; k < n; ++k) {
        const double ps = state.strong_power[k];
        const double pw = state.weak_power[k];
        report.strong_rate[k] = rate_strong(coef, ps, k);
        report.weak_direct_rate[k] = rate_weak_direct(coef, ps, pw, k);
        report.weak_at_strong_rate[k] = rate_weak_at_strong(coef, ps, pw, k);
        report.weak_hybrid_rate[k] =
            std::min(report.weak_at_strong_rate[k], coef.rf_relay_rate[k]);
        report.weak_rate[k] = state.use_relay[k] ? report.weak_hybrid_rate[k]
                                                 : report.weak_direct_rate[k];
        const bool qos_ok = meets_target(report.strong_rate[k], target_rate) &&
                            meets_target(report.weak_rate[k], target_rate);
        report.feasible[k] =
            (qos_ok && power_split_ok(state.ap_power[k], ps, pw, power_cap)) ? 1 : 0;
        sum += report.strong_rate[k] + report.weak_rate[k];
        user_rates.push_back(report.strong_rate[k]);
        user_rates.push_back(report.weak_rate[k]);
    }
    report.sum_rate = sum;
    report.jain = jain_index(user_rates);
    return report;
}

}  // namespace conoma
