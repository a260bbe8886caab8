#include "wlab/report.hpp"

#include <fstream>
#include <sstream>

namespace wlab {

namespace {

std::string trimmed(const std::string& s) {
    auto b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos)
        return "";
    auto e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

std::vector<std::string> split_list(const std::string& s) {
    std::vector<std::string> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        item = trimmed(item);
        if (!item.empty())
            out.push_back(item);
    }
    return out;
}

long parse_positive(const std::string& value, const char* key) {
    long v = 0;
    try {
        v = std::stol(value);
    } catch (...) {
        throw UsageError(std::string("config: bad value for ") + key);
    }
    if (v < 1)
        throw UsageError(std::string("config: ") + key + " must be positive");
    return v;
}

} // namespace

void apply_config_entry(RunConfig& config, const std::string& key, const std::string& value) {
    if (key == "p_list") {
        config.p_list.clear();
        for (const auto& item : split_list(value)) {
            long p = parse_positive(item, "p_list");
            if (p % 2 == 0)
                throw UsageError("config: p_list entries must be odd");
            config.p_list.push_back(static_cast<int>(p));
        }
        if (config.p_list.empty())
            throw UsageError("config: p_list is empty");
    } else if (key == "q_order") {
        config.q_order = parse_positive(value, "q_order");
    } else if (key == "closure_order") {
        config.closure_order = parse_positive(value, "closure_order");
    } else if (key == "oracle_budget_seconds") {
        config.oracle_budget_seconds = parse_positive(value, "oracle_budget_seconds");
    } else if (key == "worker_count") {
        if (value == "auto")
            config.worker_count = 0;
        else
            config.worker_count = static_cast<unsigned>(parse_positive(value, "worker_count"));
    } else if (key == "theta_normalizations") {
        config.theta_normalizations.clear();
        for (const auto& item : split_list(value))
            config.theta_normalizations.push_back(Rational::parse(item));
    } else {
        throw UsageError("config: unknown key '" + key + "'");
    }
}

RunConfig parse_config_file(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw UsageError("config: cannot open '" + path + "'");
    RunConfig config;
    std::string line;
    while (std::getline(in, line)) {
        auto hash = line.find('#');
        if (hash != std::string::npos)
            line.resize(hash);
        line = trimmed(line);
        if (line.empty())
            continue;
        auto eq = line.find('=');
        if (eq == std::string::npos)
            throw UsageError("config: expected 'key = value', got '" + line + "'");
        apply_config_entry(config, trimmed(line.substr(0, eq)), trimmed(line.substr(eq + 1)));
    }
    return config;
}

const char* to_string(CheckStatus s) {
    switch (s) {
    case CheckStatus::pass: return "pass";
    case CheckStatus::shape_only: return "shape-only";
    case CheckStatus::fail: return "fail";
    case CheckStatus::finding: return "finding";
    }
    return "fail";
}

bool SuiteReport::failed() const {
    for (const auto& e : entries)
        if (e.status == CheckStatus::fail)
            return true;
    return false;
}

CheckStatus SuiteReport::overall() const {
    if (failed())
        return CheckStatus::fail;
    for (const auto& e : entries)
        if (e.status == CheckStatus::shape_only)
            return CheckStatus::shape_only;
    for (const auto& e : entries)
        if (e.status == CheckStatus::finding)
            return CheckStatus::finding;
    return CheckStatus::pass;
}

Json SuiteReport::to_json() const {
    Json checks = Json::array();
    for (const auto& e : entries) {
        Json j;
        j["check_id"] = e.check_id;
        j["params"] = e.params;
        j["status"] = to_string(e.status);
        j["data"] = e.data;
        j["elapsed_ms"] = e.elapsed_ms;
        checks.push_back(std::move(j));
    }
    Json out;
    out["checks"] = std::move(checks);
    out["overall"] = to_string(overall());
    return out;
}

} // namespace wlab
