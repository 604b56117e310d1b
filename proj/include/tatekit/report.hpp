#pragma once

// Verification reports: ordered lists of named checks with optional
// witnesses, serializable to JSON for the CLI's machine-readable output.

#include <json.hpp>

#include <string>
#include <vector>

namespace tatekit {

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string witness;  // empty when the check passed
};

struct Report {
    std::string task;
    std::vector<CheckResult> checks;
    nlohmann::ordered_json values = nlohmann::ordered_json::object();

    bool ok() const {
        for (const auto& c : checks)
            if (!c.pass) return false;
        return true;
    }

    void add(std::string name, bool pass, std::string witness = "") {
        checks.push_back({std::move(name), pass, std::move(witness)});
    }

    const CheckResult* first_failure() const {
        for (const auto& c : checks)
            if (!c.pass) return &c;
        return nullptr;
    }

    nlohmann::ordered_json to_json() const {
        nlohmann::ordered_json j;
        j["task"] = task;
        j["checks"] = nlohmann::ordered_json::array();
        for (const auto& c : checks) {
            nlohmann::ordered_json jc;
            jc["name"] = c.name;
            jc["status"] = c.pass ? "pass" : "fail";
            if (!c.witness.empty()) jc["witness"] = c.witness;
            j["checks"].push_back(jc);
        }
        j["values"] = values;
        return j;
    }
};

}  // namespace tatekit
