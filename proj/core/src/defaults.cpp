#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "conoma/params.hpp"

namespace conoma {

// Single source of the physical defaults. configs/default_experiment.json
// ships the same numbers; a unit test keeps the two in sync.
PhysicalParams default_physical_params() {
    PhysicalParams p;
    p.elec_to_opt = 0.5;             // typical LED driver conversion factor
    p.responsivity = 0.53;           // silicon photodiode responsivity, A/W
    p.dc_bias = 0.4;                 // A; illumination-level DC operating point
    p.max_led_current = 1.0;         // A
    p.vlc_bandwidth = 20e6;          // Hz
    p.vlc_noise_psd = 1e-21;         // W/Hz
    p.rf_bandwidth = 5e6;            // Hz per user
    p.rf_noise_psd = 1e-20;          // W/Hz
    p.lambertian_order = 1.0;        // 60 deg LED semi-angle
    p.pd_area = 1e-4;                // m^2 (1 cm^2 photodiode)
    p.fov_half_angle = std::numbers::pi / 3.0;  // 60 deg receiver FOV
    p.optical_filter_gain = 1.0;
    p.concentrator_gain = 1.0;
    p.eh_fill_factor = 0.75;         // solar-cell harvesting model constants
    p.eh_thermal_voltage = 0.025;    // V, room temperature
    p.eh_dark_current = 1e-9;        // A
    p.rf_path_loss_exponent = 1.8;   // indoor line-of-sight
    p.rf_ref_loss_db = 40.0;         // dB at 1 m
    return p;
}

const std::map<std::string, std::string>& default_param_provenance() {
    static const std::map<std::string, std::string> table = {
        {"elec_to_opt", "typical LED electric-to-optical conversion factor"},
        {"responsivity", "silicon photodiode responsivity, chosen default"},
        {"dc_bias", "illumination-level DC bias, chosen default"},
        {"max_led_current", "1 A drive limit, chosen default"},
        {"vlc_bandwidth", "20 MHz modulation bandwidth, common indoor VLC value"},
        {"vlc_noise_psd", "shot+thermal noise floor, common indoor VLC value"},
        {"rf_bandwidth", "5 MHz per-user RF bandwidth, chosen default"},
        {"rf_noise_psd", "thermal RF noise floor, chosen default"},
        {"lambertian_order", "order 1 (60 deg LED semi-angle)"},
        {"pd_area", "1 cm^2 photodiode, common indoor VLC value"},
        {"fov_half_angle", "60 deg receiver field of view"},
        {"optical_filter_gain", "unity, chosen default"},
        {"concentrator_gain", "unity, chosen default"},
        {"eh_fill_factor", "solar-cell harvesting model constant"},
        {"eh_thermal_voltage", "thermal voltage at room temperature"},
        {"eh_dark_current", "solar-cell dark saturation current"},
        {"rf_path_loss_exponent", "indoor line-of-sight log-distance exponent"},
        {"rf_ref_loss_db", "40 dB reference loss at 1 m, indoor default"},
    };
    return table;
}

void PhysicalParams::validate() const {
    const auto positive = [](double v, const char* name) {
        if (!(v > 0.0) || !std::isfinite(v)) {
            throw std::invalid_argument(std::string("params: ") + name +
                                        " must be strictly positive");
        }
    };
    positive(elec_to_opt, "elec_to_opt");
    positive(responsivity, "responsivity");
    positive(dc_bias, "dc_bias");
    positive(max_led_current, "max_led_current");
    positive(vlc_bandwidth, "vlc_bandwidth");
    positive(vlc_noise_psd, "vlc_noise_psd");
    positive(rf_bandwidth, "rf_bandwidth");
    positive(rf_noise_psd, "rf_noise_psd");
    positive(lambertian_order, "lambertian_order");
    positive(pd_area, "pd_area");
    positive(fov_half_angle, "fov_half_angle");
    positive(optical_filter_gain, "optical_filter_gain");
    positive(concentrator_gain, "concentrator_gain");
    positive(eh_fill_factor, "eh_fill_factor");
    positive(eh_thermal_voltage, "eh_thermal_voltage");
    positive(eh_dark_current, "eh_dark_current");
    positive(rf_path_loss_exponent, "rf_path_loss_exponent");
    positive(rf_ref_loss_db, "rf_ref_loss_db");
    if (dc_bias >= max_led_current) {
        throw std::invalid_argument("params: dc_bias must be below max_led_current");
    }
    if (fov_half_angle > std::numbers::pi / 2.0) {
        throw std::invalid_argument("params: fov_half_angle must be in (0, pi/2]");
    }
}

double max_transmit_power(const PhysicalParams& params) {
    const double headroom = params.max_led_current - params.dc_bias;
    return headroom * headroom;
}

}  // namespace conoma
