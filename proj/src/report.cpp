#include "degbern/report.hpp"

#include <sstream>

namespace degbern {

nlohmann::ordered_json to_json(const SuiteReport& report) {
    auto out = nlohmann::ordered_json::array();
    for (const auto& c : report.checks) {
        nlohmann::ordered_json j;
        j["name"] = c.name;
        j["params"] = nlohmann::ordered_json::object();
        for (const auto& [k, v] : c.params) {
            j["params"][k] = v;
        }
        j["verdict"] = std::string(verdict_name(c.verdict));
        if (c.counterexample) {
            j["counterexample"] = {{"indices", c.counterexample->indices},
                                   {"lhs", c.counterexample->lhs},
                                   {"rhs", c.counterexample->rhs}};
        }
        if (!c.notes.empty()) {
            j["notes"] = c.notes;
        }
        out.push_back(std::move(j));
    }
    return out;
}

SuiteReport suite_report_from_json(const nlohmann::ordered_json& j) {
    SuiteReport report;
    for (const auto& item : j) {
        IdentityCheck c;
        c.name = item.at("name").get<std::string>();
        for (const auto& [k, v] : item.at("params").items()) {
            c.params.emplace_back(k, v.get<std::string>());
        }
        const auto verdict = item.at("verdict").get<std::string>();
        c.verdict = verdict == "pass" ? Verdict::pass : (verdict == "fail" ? Verdict::fail : Verdict::skipped);
        if (item.contains("counterexample")) {
            const auto& ce = item.at("counterexample");
            c.counterexample = Counterexample{ce.at("indices").get<std::string>(), ce.at("lhs").get<std::string>(),
                                              ce.at("rhs").get<std::string>()};
        }
        if (item.contains("notes")) {
            c.notes = item.at("notes").get<std::vector<std::string>>();
        }
        report.checks.push_back(std::move(c));
    }
    return report;
}

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) {
        return s;
    }
    std::string out = "\"";
    for (const char ch : s) {
        if (ch == '"') {
            out += '"';
        }
        out += ch;
    }
    return out + '"';
}

std::string to_csv(const SuiteReport& report) {
    std::ostringstream os;
    os << "name,order,k,lambda,verdict,indices,lhs,rhs,notes\n";
    for (const auto& c : report.checks) {
        std::string notes;
        for (const auto& n : c.notes) {
            notes += (notes.empty() ? "" : "; ") + n;
        }
        const Counterexample ce = c.counterexample.value_or(Counterexample{});
        os << csv_field(c.name) << ',' << csv_field(c.param("order")) << ',' << csv_field(c.param("k")) << ','
           << csv_field(c.param("lambda")) << ',' << verdict_name(c.verdict) << ',' << csv_field(ce.indices)
           << ',' << csv_field(ce.lhs) << ',' << csv_field(ce.rhs) << ',' << csv_field(notes) << '\n';
    }
    return os.str();
}

} // namespace degbern
