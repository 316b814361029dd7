#pragma once

#include <string>

#include <json.hpp>

#include "gfwilson/identities.hpp"
#include "gfwilson/symmetric.hpp"

namespace gfwilson {

/// Version of the JSON report layout.
inline constexpr int kReportSchema = 1;

nlohmann::ordered_json to_json(const CheckResult& check);

/// {"schema":1, "subject", <params>, ["modulus"], "checks", "all_pass"}
nlohmann::ordered_json to_json(const VerificationReport& report);

/// s_1 .. s_{q-1} as element encodings.
nlohmann::ordered_json to_json(const SymmetricProfile& profile);

/// Stable serialization used for every JSON document the tool prints.
std::string dump(const nlohmann::ordered_json& doc);

/// One line per check: name, params, expected, actual, verdict.
std::string render_text(const VerificationReport& report);

}  // namespace gfwilson
