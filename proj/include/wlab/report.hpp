#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "wlab/rational.hpp"

namespace wlab {

using Json = nlohmann::ordered_json;

struct RunConfig {
    std::vector<int> p_list{3, 5};
    long q_order = 50;
    long closure_order = 200;
    long oracle_budget_seconds = 900;
    unsigned worker_count = 0;                  // 0: auto (WLAB_WORKERS / hardware)
    std::vector<Rational> theta_normalizations; // empty: per-p default {1, 2p, 4p}
};

/// Key-value config file: one `key = value` per line, '#' comments.
/// Lists are comma-separated. Unknown keys are an error.
RunConfig parse_config_file(const std::string& path);
void apply_config_entry(RunConfig& config, const std::string& key, const std::string& value);

enum class CheckStatus { pass, shape_only, fail, finding };
const char* to_string(CheckStatus s);

struct CheckEntry {
    std::string check_id;
    Json params = Json::object();
    CheckStatus status = CheckStatus::fail;
    Json data = Json::object();
    long long elapsed_ms = 0;
};

struct SuiteReport {
    std::vector<CheckEntry> entries;

    bool failed() const;
    CheckStatus overall() const; // fail dominates; shape-only is never masked
    Json to_json() const;
};

} // namespace wlab
