#pragma once

#include <json.hpp>

#include "irvmargin/search.hpp"

namespace irvmargin::cli {

inline constexpr int kSchemaVersion = 1;

/// Candidate names are embedded so the document is self-contained.
nlohmann::json report_to_json(const MarginReport& report, const std::vector<std::string>& names);
/// Inverse of report_to_json. Throws ParseError on a malformed document or an
/// unsupported schema version.
MarginReport report_from_json(const nlohmann::json& doc);

nlohmann::json tabulation_to_json(const TabulationResult& result, const Election& election);

}  // namespace irvmargin::cli
