#pragma once

#include <string>
#include <vector>

#include "json.hpp"

namespace symstab {

// Validator for the JSON Schema subset used by the report schema: type, enum,
// const, pattern, minimum, required, properties, additionalProperties, items,
// anyOf and local "#/definitions/..." references.
std::vector<std::string> validate_json(const nlohmann::json& instance, const nlohmann::json& schema);

// data/schema/reports.schema.json.
const nlohmann::json& report_schema();

// Validates against the definition named by instance["report"].
std::vector<std::string> validate_report(const nlohmann::json& instance);

}  // namespace symstab
