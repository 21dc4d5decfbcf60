#pragma once

#include <map>
#include <string>

namespace conoma {

/// Physical constants of one scenario: LED/photodiode front ends, VLC and RF
/// link budgets, and the relay's light-energy-harvesting model. All values are
/// SI. Use default_physical_params() for the documented defaults.
struct PhysicalParams {
    double elec_to_opt = 0.0;          // electric-to-optical conversion factor (dimensionless)
    double responsivity = 0.0;         // optical-to-electric conversion factor (A/W)
    double dc_bias = 0.0;              // DC bias current added per AP (A)
    double max_led_current = 0.0;      // maximum allowed LED input current (A)
    double vlc_bandwidth = 0.0;        // VLC modulation bandwidth (Hz)
    double vlc_noise_psd = 0.0;        // VLC noise power spectral density (W/Hz)
    double rf_bandwidth = 0.0;         // RF bandwidth assigned to one user (Hz)
    double rf_noise_psd = 0.0;         // RF noise power spectral density (W/Hz)
    double lambertian_order = 0.0;     // LED Lambertian emission order
    double pd_area = 0.0;              // photodiode active area (m^2)
    double fov_half_angle = 0.0;       // receiver field-of-view half angle (rad)
    double optical_filter_gain = 0.0;  // receiver optical filter gain
    double concentrator_gain = 0.0;    // receiver concentrator gain
    double eh_fill_factor = 0.0;       // harvester fill factor
    double eh_thermal_voltage = 0.0;   // harvester thermal voltage (V)
    double eh_dark_current = 0.0;      // harvester dark saturation current (A)
    double rf_path_loss_exponent = 0.0;
    double rf_ref_loss_db = 0.0;       // RF path loss at 1 m (dB)

    /// Throws std::invalid_argument when a field is out of range
    /// (non-positive, dc_bias >= max_led_current, FOV outside (0, pi/2]).
    void validate() const;
};

/// Documented desk-scale defaults. Single source of truth; the shipped
/// configs/default_experiment.json mirrors these values.
PhysicalParams default_physical_params();

/// Provenance string per PhysicalParams field name (for config/manifest echo).
const std::map<std::string, std::string>& default_param_provenance();

/// AP transmit power budget implied by the LED dynamic range: (I_H - b)^2.
double max_transmit_power(const PhysicalParams& params);

}  // namespace conoma
