#pragma once

// Internal helpers shared by the JSON readers (scenario, experiment config).

#include <json.hpp>

#include <string>

#include "conoma/params.hpp"

namespace conoma::detail {

using nlohmann::json;

/// Parse with a "line L, column C" diagnostic instead of a byte offset.
json parse_with_location(const std::string& text);

/// Throws std::invalid_argument naming the first key of `object` that is not
/// in `allowed`.
void reject_unknown_keys(const json& object, std::initializer_list<const char*> allowed,
                         const std::string& context);

double require_number(const json& object, const char* key, const std::string& context);

/// PhysicalParams <-> JSON. Fields may be bare numbers or
/// {"value": v, "provenance": "..."} objects; `provenance_out` (optional)
/// collects the strings.
PhysicalParams params_from_json(const json& object,
                                std::map<std::string, std::string>* provenance_out);
json params_to_json(const PhysicalParams& params,
                    const std::map<std::string, std::string>* provenance);

}  // namespace conoma::detail
