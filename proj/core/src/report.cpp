#include "syang/report.hpp"

namespace syang {

json Check::to_json() const
{
    json j;
    j["check"] = check;
    j["params"] = params;
    j["status"] = pass ? "pass" : "fail";
    if (witness) j["witness"] = *witness;
    return j;
}

void Report::append(const Report& other)
{
    checks.insert(checks.end(), other.checks.begin(), other.checks.end());
}

bool Report::pass() const { return first_failure() == nullptr; }

const Check* Report::first_failure() const
{
    for (const auto& c : checks)
        if (!c.pass) return &c;
    return nullptr;
}

json Report::to_json() const
{
    json arr = json::array();
    for (const auto& c : checks) arr.push_back(c.to_json());
    return arr;
}

}  // namespace syang
