#include "json_util.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>
#include <vector>

namespace conoma::detail {

json parse_with_location(const std::string& text) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        std::size_t line = 1;
        std::size_t column = 1;
        const std::size_t limit = std::min(e.byte, text.size());
        for (std::size_t i = 0; i < limit; ++i) {
            if (text[i] == '\n') {
                ++line;
                column = 1;
            } else {
                ++column;
            }
        }
        throw std::runtime_error("parse error at line " + std::to_string(line) +
                                 ", column " + std::to_string(column) + ": " + e.what());
    }
}

void reject_unknown_keys(const json& object, std::initializer_list<const char*> allowed,
                         const std::string& context) {
    if (!object.is_object()) {
        throw std::invalid_argument(context + ": expected a JSON object");
    }
    for (const auto& item : object.items()) {
        const bool known = std::any_of(allowed.begin(), allowed.end(),
                                       [&](const char* k) { return item.key() == k; });
        if (!known) {
            throw std::invalid_argument(context + ": unknown key \"" + item.key() + "\"");
        }
    }
}

double require_number(const json& object, const char* key, const std::string& context) {
    if (!object.contains(key)) {
        throw std::invalid_argument(context + ": missing key \"" + key + "\"");
    }
    const json& v = object.at(key);
    if (!v.is_number()) {
        throw std::invalid_argument(context + ": key \"" + std::string(key) +
                                    "\" must be a number");
    }
    return v.get<double>();
}

namespace {

struct ParamField {
    const char* name;
    double PhysicalParams::* member;
};

const std::vector<ParamField>& param_fields() {
    static const std::vector<ParamField> fields = {
        {"elec_to_opt", &PhysicalParams::elec_to_opt},
        {"responsivity", &PhysicalParams::responsivity},
        {"dc_bias", &PhysicalParams::dc_bias},
        {"max_led_current", &PhysicalParams::max_led_current},
        {"vlc_bandwidth", &PhysicalParams::vlc_bandwidth},
        {"vlc_noise_psd", &PhysicalParams::vlc_noise_psd},
        {"rf_bandwidth", &PhysicalParams::rf_bandwidth},
        {"rf_noise_psd", &PhysicalParams::rf_noise_psd},
        {"lambertian_order", &PhysicalParams::lambertian_order},
        {"pd_area", &PhysicalParams::pd_area},
        {"fov_half_angle", &PhysicalParams::fov_half_angle},
        {"optical_filter_gain", &PhysicalParams::optical_filter_gain},
        {"concentrator_gain", &PhysicalParams::concentrator_gain},
        {"eh_fill_factor", &PhysicalParams::eh_fill_factor},
        {"eh_thermal_voltage", &PhysicalParams::eh_thermal_voltage},
        {"eh_dark_current", &PhysicalParams::eh_dark_current},
        {"rf_path_loss_exponent", &PhysicalParams::rf_path_loss_exponent},
        {"rf_ref_loss_db", &PhysicalParams::rf_ref_loss_db},
    };
    return fields;
}

}  // namespace

PhysicalParams params_from_json(const json& object,
                                std::map<std::string, std::string>* provenance_out) {
    if (!object.is_object()) {
        throw std::invalid_argument("params: expected a JSON object");
    }
    for (const auto& item : object.items()) {
        const bool known =
            std::any_of(param_fields().begin(), param_fields().end(),
                        [&](const ParamField& f) { return item.key() == f.name; });
        if (!known) {
            throw std::invalid_argument("params: unknown key \"" + item.key() + "\"");
        }
    }
    PhysicalParams params;
    for (const ParamField& field : param_fields()) {
        if (!object.contains(field.name)) {
            throw std::invalid_argument(std::string("params: missing key \"") + field.name +
                                        "\"");
        }
        const json& v = object.at(field.name);
        if (v.is_number()) {
            params.*(field.member) = v.get<double>();
        } else if (v.is_object()) {
            reject_unknown_keys(v, {"value", "provenance"},
                                std::string("params.") + field.name);
            params.*(field.member) =
                require_number(v, "value", std::string("params.") + field.name);
            if (provenance_out && v.contains("provenance")) {
                (*provenance_out)[field.name] = v.at("provenance").get<std::string>();
            }
        } else {
            throw std::invalid_argument(std::string("params: key \"") + field.name +
                                        "\" must be a number or {value, provenance}");
        }
    }
    params.validate();
    return params;
}

json params_to_json(const PhysicalParams& params,
                    const std::map<std::string, std::string>* provenance) {
    json out = json::object();
    for (const ParamField& field : param_fields()) {
        const double value = params.*(field.member);
        if (provenance) {
            json entry = json::object();
            entry["value"] = value;
            const auto it = provenance->find(field.name);
            entry["provenance"] = it != provenance->end() ? it->second : "chosen default";
            out[field.name] = std::move(entry);
        } else {
            out[field.name] = value;
        }
    }
    return out;
}

}  // namespace conoma::detail
