#pragma once

// Verification reports.  Every check records the parameters it ran with (at
// least p and the truncation order), so nothing is ever claimed for all orders.

#include <nlohmann/json.hpp>

#include <optional>
#include <string>
#include <vector>

namespace syang {

using json = nlohmann::ordered_json;

struct Check {
    Check() = default;
    Check(std::string name, json p) : check(std::move(name)), params(std::move(p)) {}

    std::string check;
    json params = json::object();
    bool pass = true;
    std::optional<std::string> witness;  // first failing identity / coefficient

    json to_json() const;
};

struct Report {
    std::vector<Check> checks;

    void add(Check c) { checks.push_back(std::move(c)); }
    void append(const Report& other);
    bool pass() const;
    /// First failing check, or nullptr.
    const Check* first_failure() const;
    json to_json() const;
};

}  // namespace syang
