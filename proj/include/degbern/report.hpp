#pragma once

#include <string>

#include "json.hpp"

#include "degbern/identities.hpp"

namespace degbern {

/// Array of {name, params, verdict, counterexample?, notes?}. Values are
/// exact strings, never floating point.
nlohmann::ordered_json to_json(const SuiteReport& report);
SuiteReport suite_report_from_json(const nlohmann::ordered_json& j);

/// Header: name,order,k,lambda,verdict,indices,lhs,rhs,notes.
std::string to_csv(const SuiteReport& report);

/// RFC 4180 quoting when the field contains a comma, quote or newline.
std::string csv_field(const std::string& s);

} // namespace degbern
