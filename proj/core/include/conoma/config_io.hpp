#pragma once

#include <map>
#include <string>
#include <vector>

#include "conoma/sim_harness.hpp"

namespace conoma {

/// Parsed experiment plan: one base configuration run once per listed scheme.
struct ExperimentPlan {
    std::vector<Scheme> schemes;
    ExperimentConfig base;
    /// provenance string per physical parameter, echoed into the manifest
    std::map<std::string, std::string> provenance;
};

ExperimentPlan default_experiment_plan();

/// Strict parser: unknown keys are an error naming the key, parse errors carry
/// line/column. Accepts either an experiment config (schema
/// "conoma-experiment-v1") or a run manifest (schema "conoma-manifest-v1",
/// whose "resolved_config" is replayed). Physical parameters may be bare
/// numbers or {"value": v, "provenance": "..."} objects.
ExperimentPlan experiment_plan_from_json(const std::string& text);

/// Serializes with provenance objects for the physical parameters; the output
/// parses back with experiment_plan_from_json.
std::string experiment_plan_to_json(const ExperimentPlan& plan);

ExperimentPlan load_experiment_plan(const std::string& path);

}  // namespace conoma
