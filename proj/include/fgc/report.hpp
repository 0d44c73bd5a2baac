#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "fgc/config.hpp"

namespace fgc::cli {

struct RunOptions {
    int workers = 0; // 0: one task per hardware thread
    bool timings = false;
};

// full report envelope plus the derived process exit code
struct RunOutcome {
    nlohmann::json report;
    std::string status; // "certified" or "conjectural"
    int exit_code = 0;  // 0 all certified, 2 conjectural or undecided claims
};

// dispatches the scenario to the owning engine and assembles the report;
// throws on hard failures (invalid specs, violated theorems)
RunOutcome run_scenario(const ScenarioConfig& cfg, const RunOptions& opt = {});

// canonical rendering: sorted keys, two-space indent, trailing newline;
// byte-identical for identical reports
std::string emit_json(const nlohmann::json& report);

// human-readable rendering of the same data
std::string emit_table(const nlohmann::json& report);

std::vector<std::string> demo_names();

// config text of a packaged demo, byte-identical to the shipped fixture file
const std::string& demo_config(const std::string& name);

const char* tool_version();

} // namespace fgc::cli
