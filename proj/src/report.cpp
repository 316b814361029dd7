#include "gfwilson/report.hpp"

#include <sstream>

namespace gfwilson {

nlohmann::ordered_json to_json(const CheckResult& check) {
    nlohmann::ordered_json params = nlohmann::ordered_json::object();
    for (const auto& [key, value] : check.params) params[key] = value;
    return {{"name", check.name},
            {"params", std::move(params)},
            {"pass", check.pass},
            {"expected", check.expected},
            {"actual", check.actual}};
}

nlohmann::ordered_json to_json(const VerificationReport& report) {
    nlohmann::ordered_json doc;
    doc["schema"] = kReportSchema;
    doc["subject"] = report.subject;
    for (const auto& [key, value] : report.params) doc[key] = value;
    if (!report.modulus.empty()) doc["modulus"] = report.modulus;
    nlohmann::ordered_json checks = nlohmann::ordered_json::array();
    for (const CheckResult& c : report.checks) checks.push_back(to_json(c));
    doc["checks"] = std::move(checks);
    doc["all_pass"] = report.all_pass();
    return doc;
}

nlohmann::ordered_json to_json(const SymmetricProfile& profile) {
    nlohmann::ordered_json out = nlohmann::ordered_json::array();
    for (const FieldElement& s : profile.values) out.push_back(s.encoding());
    return out;
}

std::string dump(const nlohmann::ordered_json& doc) { return doc.dump(2) + "\n"; }

std::string render_text(const VerificationReport& report) {
    std::ostringstream os;
    for (const CheckResult& c : report.checks) {
        os << c.name;
        for (const auto& [key, value] : c.params) os << ' ' << key << '=' << value;
        os << "  expected=" << c.expected << " actual=" << c.actual << "  "
           << (c.pass ? "PASS" : "FAIL") << '\n';
    }
    return os.str();
}

}  // namespace gfwilson
