#pragma once

// JSON form of check reports. Big integers and rationals are serialized as
// decimal strings so downstream tools never round them. Field order is fixed
// so identical runs produce identical bytes.

#include <string>
#include <vector>

#include <json.hpp>

#include "vdgap/report.hpp"

namespace vdgap {

using ordered_json = nlohmann::ordered_json;

ordered_json report_to_json(const CheckReport& report);

// Top-level document: {command, params, checks, summary{total, failed}, elapsed_ms}.
ordered_json run_document(const std::string& command,
                          const std::vector<std::pair<std::string, std::string>>& params,
                          const std::vector<CheckReport>& checks, long long elapsed_ms);

}  // namespace vdgap
