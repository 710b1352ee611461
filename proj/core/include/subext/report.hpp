#pragma once

// Scenario reports and their serialization (JSON with sorted keys).

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace subext {

enum class Status { Pass, Fail, Budget };

const char* status_name(Status s);
Status parse_status(const std::string& s);

struct Instance {
    std::string label;
    std::map<std::string, std::string> inputs;
    std::map<std::string, std::string> values;
    std::string expected; // the relation checked
    Status status = Status::Pass;
    std::string note;     // error text for budget or failed instances
};

struct ScenarioResult {
    std::string scenario;
    std::string claim;
    std::string rings;
    std::vector<Instance> instances;
    Status status = Status::Pass;
    double wall_ms = 0;
    std::uint64_t seed = 0;
    std::uint64_t budget = 0;
    std::uint64_t consumed = 0; // enumerated classes

    int count(Status s) const;
    // pass iff every instance passes; budget iff none fails and some ran out
    void finish();
};

std::string to_text(const ScenarioResult& r, bool with_time = true);
ScenarioResult from_text(const std::string& text);

} // namespace subext
