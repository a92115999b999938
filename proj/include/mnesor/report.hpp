#ifndef MNESOR_REPORT_HPP
#define MNESOR_REPORT_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

namespace mnesor {

enum class Status { Pass, Restricted, Fail };

inline std::string to_string(Status s) {
    switch (s) {
        case Status::Pass: return "PASS";
        case Status::Restricted: return "RESTRICTED";
        case Status::Fail: return "FAIL";
    }
    return "?";
}

/// A concrete violation: the property label, one printed value per
/// quantified variable, and the two evaluated sides that differ.
struct CounterexampleDoc {
    std::string property;
    std::vector<std::pair<std::string, std::string>> bindings;
    std::string lhs;
    std::string rhs;
};

struct PropertyResult {
    std::string label;
    Status status = Status::Pass;
    unsigned long long cases = 0;
    std::optional<CounterexampleDoc> counterexample;
};

struct SectionReport {
    std::string kind;  // "bitrop" | "space"
    std::string model; // concrete model name
    std::vector<PropertyResult> properties;
};

struct Report {
    std::string model;
    std::vector<std::pair<std::string, std::string>> parameters;
    std::string mode; // "exhaustive" | "randomized"
    std::optional<unsigned long long> seed;
    unsigned long long cap = 0;
    std::vector<SectionReport> sections;

    bool all_pass() const {
        for (const auto& sec : sections)
            for (const auto& p : sec.properties)
                if (p.status == Status::Fail) return false;
        return true;
    }

    const PropertyResult* find(std::string_view section_kind, std::string_view label) const {
        for (const auto& sec : sections) {
            if (sec.kind != section_kind) continue;
            for (const auto& p : sec.properties)
                if (p.label == label) return &p;
        }
        return nullptr;
    }
};

inline nlohmann::ordered_json to_json(const CounterexampleDoc& c) {
    nlohmann::ordered_json j;
    j["property"] = c.property;
    nlohmann::ordered_json vars;
    for (const auto& [name, value] : c.bindings) vars[name] = value;
    j["bindings"] = vars;
    j["lhs"] = c.lhs;
    j["rhs"] = c.rhs;
    return j;
}

inline nlohmann::ordered_json to_json(const Report& r) {
    nlohmann::ordered_json j;
    j["model"] = r.model;
    nlohmann::ordered_json params;
    for (const auto& [k, v] : r.parameters) params[k] = v;
    j["parameters"] = params;
    j["mode"] = r.mode;
    if (r.seed) j["seed"] = *r.seed;
    j["cap"] = r.cap;
    j["sections"] = nlohmann::ordered_json::array();
    for (const auto& sec : r.sections) {
        nlohmann::ordered_json js;
        js["kind"] = sec.kind;
        js["model"] = sec.model;
        js["properties"] = nlohmann::ordered_json::array();
        for (const auto& p : sec.properties) {
            nlohmann::ordered_json jp;
            jp["label"] = p.label;
            jp["status"] = to_string(p.status);
            jp["cases"] = p.cases;
            if (p.counterexample) jp["counterexample"] = to_json(*p.counterexample);
            js["properties"].push_back(std::move(jp));
        }
        j["sections"].push_back(std::move(js));
    }
    return j;
}

inline std::string render(const Report& r) { return to_json(r).dump(2) + "\n"; }

} // namespace mnesor

#endif
