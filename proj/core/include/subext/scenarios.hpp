#pragma once

// Named verification scenarios and ad-hoc computations over a workspace.

#include <cstdint>
#include <string>
#include <vector>

#include "subext/modules.hpp"
#include "subext/report.hpp"
#include "subext/workspace.hpp"

namespace subext {

struct ScenarioOptions {
    std::uint64_t seed = 1;
    std::uint64_t budget = kDefaultBudget;
    std::string workspace; // workspace text; empty means the desk workspace
};

struct ScenarioInfo {
    std::string name;
    std::string claim;
};

// Sorted by name.
const std::vector<ScenarioInfo>& scenario_registry();

// Throws UnknownScenario. Errors inside an instance are recorded on the
// instance (budget errors as status budget) and never abort the run.
ScenarioResult run_scenario(const std::string& name, const ScenarioOptions& opts = {});

// Runs several scenarios on a thread pool; results sorted by name.
std::vector<ScenarioResult> run_scenarios(const std::vector<std::string>& names, const ScenarioOptions& opts,
                                          int threads);

struct ComputeRequest {
    std::string cmd; // ring-info, mod-invariants, ext, ext-sub, ext-ul, verify-ses
    std::vector<std::string> labels;
    std::vector<std::string> fns; // mu, nu:IDEAL, len_tensor:MODULE, len_hom_from:MODULE, len_hom_to:MODULE, et:IDEAL
    std::string ideal = "m";      // workspace ideal label or m
    int s = 1;
    int degree = 1;
    std::int64_t class_index = -1;
    std::uint64_t budget = kDefaultBudget;
};

// JSON text with sorted keys; errors are reported as {"error": {"code", "message"}}
// and flagged through `ok`.
std::string compute(const Workspace& ws, const ComputeRequest& req, bool* ok = nullptr);

} // namespace subext
