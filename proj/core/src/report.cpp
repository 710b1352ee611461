#include "subext/report.hpp"

#include <json.hpp>

#include "subext/error.hpp"

namespace subext {

using json = nlohmann::json;

const char* status_name(Status s) {
    switch (s) {
    case Status::Pass:
        return "pass";
    case Status::Fail:
        return "fail";
    case Status::Budget:
        return "budget";
    }
    return "fail";
}

Status parse_status(const std::string& s) {
    if (s == "pass") {
        return Status::Pass;
    }
    if (s == "fail") {
        return Status::Fail;
    }
    if (s == "budget") {
        return Status::Budget;
    }
    fail(ErrorCode::ParseError, "unknown status '" + s + "'");
}

int ScenarioResult::count(Status s) const {
    int n = 0;
    for (const auto& i : instances) {
        n += i.status == s;
    }
    return n;
}

void ScenarioResult::finish() {
    if (count(Status::Fail) > 0) {
        status = Status::Fail;
    } else if (count(Status::Budget) > 0) {
        status = Status::Budget;
    } else {
        status = Status::Pass;
    }
}

std::string to_text(const ScenarioResult& r, bool with_time) {
    json j;
    j["scenario"] = r.scenario;
    j["claim"] = r.claim;
    j["rings"] = r.rings;
    j["status"] = status_name(r.status);
    j["seed"] = r.seed;
    j["budget"] = r.budget;
    j["consumed"] = r.consumed;
    if (with_time) {
        j["wall_ms"] = r.wall_ms;
    }
    j["counts"] = {{"pass", r.count(Status::Pass)}, {"fail", r.count(Status::Fail)}, {"budget", r.count(Status::Budget)}};
    json inst = json::array();
    for (const auto& i : r.instances) {
        json o;
        o["label"] = i.label;
        o["inputs"] = i.inputs;
        o["values"] = i.values;
        o["expected"] = i.expected;
        o["status"] = status_name(i.status);
        if (!i.note.empty()) {
            o["note"] = i.note;
        }
        inst.push_back(std::move(o));
    }
    j["instances"] = std::move(inst);
    return j.dump(2) + "\n";
}

ScenarioResult from_text(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        fail(ErrorCode::ParseError, e.what());
    }
    ScenarioResult r;
    try {
        r.scenario = j.at("scenario").get<std::string>();
        r.claim = j.at("claim").get<std::string>();
        r.rings = j.at("rings").get<std::string>();
        r.status = parse_status(j.at("status").get<std::string>());
        r.seed = j.at("seed").get<std::uint64_t>();
        r.budget = j.at("budget").get<std::uint64_t>();
        r.consumed = j.at("consumed").get<std::uint64_t>();
        r.wall_ms = j.value("wall_ms", 0.0);
        for (const auto& o : j.at("instances")) {
            Instance i;
            i.label = o.at("label").get<std::string>();
            i.inputs = o.at("inputs").get<std::map<std::string, std::string>>();
            i.values = o.at("values").get<std::map<std::string, std::string>>();
            i.expected = o.at("expected").get<std::string>();
            i.status = parse_status(o.at("status").get<std::string>());
            i.note = o.value("note", std::string());
            r.instances.push_back(std::move(i));
        }
    } catch (const json::exception& e) {
        fail(ErrorCode::ParseError, e.what());
    }
    return r;
}

} // namespace subext
