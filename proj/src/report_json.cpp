#include "vdgap/report_json.hpp"

namespace vdgap {

ordered_json report_to_json(const CheckReport& report) {
    ordered_json j;
    j["name"] = report.name;
    ordered_json premises = ordered_json::array();
    for (const auto& p : report.premises) {
        premises.push_back({{"description", p.description}, {"pass", p.pass}});
    }
    j["premises"] = premises;
    if (report.conclusion) {
        j["lhs"] = report.conclusion->lhs;
        j["rhs"] = report.conclusion->rhs;
        j["relation"] = report.conclusion->relation;
        j["ordering"] = report.conclusion->ordering ? ordering_name(*report.conclusion->ordering)
                                                    : std::string();
    } else {
        j["lhs"] = "";
        j["rhs"] = "";
        j["relation"] = "";
        j["ordering"] = "";
    }
    j["witness"] = report.witness;
    j["pass"] = report.passed();
    if (!report.details.empty()) {
        ordered_json details;
        for (const auto& [key, value] : report.details) details[key] = value;
        j["details"] = details;
    }
    return j;
}

ordered_json run_document(const std::string& command,
                          const std::vector<std::pair<std::string, std::string>>& params,
                          const std::vector<CheckReport>& checks, long long elapsed_ms) {
    ordered_json doc;
    doc["command"] = command;
    ordered_json p;
    for (const auto& [key, value] : params) p[key] = value;
    doc["params"] = p;
    ordered_json arr = ordered_json::array();
    int failed = 0;
    for (const auto& check : checks) {
        arr.push_back(report_to_json(check));
        if (!check.passed()) ++failed;
    }
    doc["checks"] = arr;
    doc["summary"] = {{"total", checks.size()}, {"failed", failed}};
    doc["elapsed_ms"] = elapsed_ms;
    return doc;
}

}  // namespace vdgap
