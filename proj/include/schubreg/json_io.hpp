#pragma once

#include <string>

#include "json.hpp"
#include "schubreg/reg.hpp"

namespace schubreg {

/// Integers are written as JSON numbers when they fit in 64 bits and as
/// decimal strings otherwise; both forms are accepted when reading.
nlohmann::json integer_to_json(const Integer& x);
Integer integer_from_json(const nlohmann::json& j);

nlohmann::json report_to_json(const RegularityReport& r);
RegularityReport report_from_json(const nlohmann::json& j);

/// One cache line (no trailing newline).
std::string record_to_jsonl(const ScanRecord& r);
/// Throws InvalidArgument on malformed input.
ScanRecord record_from_jsonl(const std::string& line);

}  // namespace schubreg
