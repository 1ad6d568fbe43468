#pragma once

// Wire formats: validation reports, configuration JSON lines, enumeration
// summaries, bound reports and the corpus CSV. JSON documents carry a
// "schema_version"; big integers are decimal strings.

#include <string>
#include <vector>

#include <json.hpp>

#include "surfenum/bounds.hpp"
#include "surfenum/diagram.hpp"
#include "surfenum/enumerate.hpp"
#include "surfenum/euler.hpp"
#include "surfenum/words.hpp"

namespace surfenum {

inline constexpr int kSchemaVersion = 1;

using Json = nlohmann::ordered_json;

Json to_json(const ValidationReport& r);
std::string to_text(const ValidationReport& r);

Json to_json(const EnumerationBudget& b);

// One enumerated configuration; needs the diagram for tubing counts.
Json configuration_json(const Configuration& cfg, const Diagram& d);

Json to_json(const BoundReport& r);
std::string to_text(const BoundReport& r);

std::string rational_string(const Rational& q);

// Frozen column order of the corpus CSV.
const std::vector<std::string>& report_csv_columns();

}  // namespace surfenum
