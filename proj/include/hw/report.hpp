#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include <json.hpp>

namespace hw {

using json = nlohmann::ordered_json;

struct Check {
    std::string id;
    bool pass = false;
    json witness; // null on success
};

// Verification report; checks are sorted by id when serialized.
struct Report {
    std::string suite;
    json config = json::object();
    json conventions = json::object();
    std::vector<Check> checks;

    void add(std::string id, bool ok, json witness = nullptr) {
        checks.push_back({std::move(id), ok, ok ? json(nullptr) : std::move(witness)});
    }
    void merge(const Report& o, const std::string& prefix = "") {
        for (const auto& c : o.checks) checks.push_back({prefix + c.id, c.pass, c.witness});
        for (auto it = o.conventions.begin(); it != o.conventions.end(); ++it) conventions[it.key()] = it.value();
    }
    bool pass() const {
        return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.pass; });
    }
    std::size_t failures() const {
        return static_cast<std::size_t>(std::count_if(checks.begin(), checks.end(), [](const Check& c) { return !c.pass; }));
    }
    json to_json() const {
        std::vector<const Check*> sorted;
        for (const auto& c : checks) sorted.push_back(&c);
        std::stable_sort(sorted.begin(), sorted.end(), [](const Check* a, const Check* b) { return a->id < b->id; });
        json arr = json::array();
        for (const auto* c : sorted) {
            json j;
            j["id"] = c->id;
            j["status"] = c->pass ? "pass" : "fail";
            j["witness"] = c->witness;
            arr.push_back(std::move(j));
        }
        json out;
        out["suite"] = suite;
        out["config"] = config;
        out["conventions"] = conventions;
        out["checks"] = std::move(arr);
        out["pass"] = pass();
        return out;
    }
};

} // namespace hw
