#include <fstream>
#include <sstream>
#include <stdexcept>

#include "conoma/scenario.hpp"
#include "json_util.hpp"

namespace conoma {

namespace {

using detail::json;

constexpr const char* kSchema = "conoma-scenario-v1";

json positions_to_json(const std::vector<Vec3>& positions) {
    json out = json::array();
    for (const Vec3& p : positions) {
        out.push_back(json::array({p.x, p.y, p.z}));
    }
    return out;
}

std::vector<Vec3> positions_from_json(const json& arr, const std::string& context) {
    if (!arr.is_array()) {
        throw std::invalid_argument(context + ": expected an array of [x, y, z]");
    }
    std::vector<Vec3> out;
    out.reserve(arr.size());
    for (const json& item : arr) {
        if (!item.is_array() || item.size() != 3 || !item[0].is_number() ||
            !item[1].is_number() || !item[2].is_number()) {
            throw std::invalid_argument(context + ": each position must be [x, y, z]");
        }
        out.push_back({item[0].get<double>(), item[1].get<double>(), item[2].get<double>()});
    }
    return out;
}

std::vector<std::vector<double>> matrix_from_json(const json& arr,
                                                  const std::string& context) {
    if (!arr.is_array()) {
        throw std::invalid_argument(context + ": expected a matrix (array of arrays)");
    }
    std::vector<std::vector<double>> out;
    out.reserve(arr.size());
    for (const json& row : arr) {
        if (!row.is_array()) {
            throw std::invalid_argument(context + ": expected a matrix (array of arrays)");
        }
        std::vector<double> r;
        r.reserve(row.size());
        for (const json& v : row) {
            if (!v.is_number()) {
                throw std::invalid_argument(context + ": matrix entries must be numbers");
            }
            r.push_back(v.get<double>());
        }
        out.push_back(std::move(r));
    }
    return out;
}

std::vector<double> vector_from_json(const json& arr, const std::string& context) {
    if (!arr.is_array()) {
        throw std::invalid_argument(context + ": expected an array of numbers");
    }
    std::vector<double> out;
    out.reserve(arr.size());
    for (const json& v : arr) {
        if (!v.is_number()) {
            throw std::invalid_argument(context + ": entries must be numbers");
        }
        out.push_back(v.get<double>());
    }
    return out;
}

}  // namespace

std::string scenario_to_json(const NetworkScenario& scenario) {
    json out;
    out["schema"] = kSchema;
    out["params"] = detail::params_to_json(scenario.params, nullptr);
    out["ap_positions"] = positions_to_json(scenario.ap_positions);
    out["strong_user_positions"] = positions_to_json(scenario.strong_user_positions);
    out["weak_user_positions"] = positions_to_json(scenario.weak_user_positions);
    out["vlc_gain_strong"] = scenario.vlc_gain_strong;
    out["vlc_gain_weak"] = scenario.vlc_gain_weak;
    out["rf_gain"] = scenario.rf_gain;
    return out.dump(2);
}

NetworkScenario scenario_from_json(const std::string& text) {
    const json root = detail::parse_with_location(text);
    detail::reject_unknown_keys(root,
                                {"schema", "params", "ap_positions", "strong_user_positions",
                                 "weak_user_positions", "vlc_gain_strong", "vlc_gain_weak",
                                 "rf_gain"},
                                "scenario");
    if (!root.contains("schema") || root.at("schema") != kSchema) {
        throw std::invalid_argument(std::string("scenario: expected schema \"") + kSchema +
                                    "\"");
    }
    for (const char* key : {"params", "ap_positions", "strong_user_positions",
                            "weak_user_positions", "vlc_gain_strong", "vlc_gain_weak",
                            "rf_gain"}) {
        if (!root.contains(key)) {
            throw std::invalid_argument(std::string("scenario: missing key \"") + key + "\"");
        }
    }

    NetworkScenario s;
    s.params = detail::params_from_json(root.at("params"), nullptr);
    s.ap_positions = positions_from_json(root.at("ap_positions"), "scenario.ap_positions");
    s.strong_user_positions =
        positions_from_json(root.at("strong_user_positions"), "scenario.strong_user_positions");
    s.weak_user_positions =
        positions_from_json(root.at("weak_user_positions"), "scenario.weak_user_positions");
    s.vlc_gain_strong = matrix_from_json(root.at("vlc_gain_strong"), "scenario.vlc_gain_strong");
    s.vlc_gain_weak = matrix_from_json(root.at("vlc_gain_weak"), "scenario.vlc_gain_weak");
    s.rf_gain = vector_from_json(root.at("rf_gain"), "scenario.rf_gain");
    s.validate();
    return s;
}

void save_scenario(const NetworkScenario& scenario, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw std::runtime_error("save_scenario: cannot open " + path);
    }
    out << scenario_to_json(scenario) << '\n';
    if (!out) {
        throw std::runtime_error("save_scenario: write failed for " + path);
    }
}

NetworkScenario load_scenario(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw std::runtime_error("load_scenario: cannot open " + path);
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return scenario_from_json(buffer.str());
}

}  // namespace conoma
