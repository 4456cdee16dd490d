#include "cohinv/harness/report.hpp"

#include <sstream>

namespace cohinv::harness {

nlohmann::json to_json(const SuiteReport& r, bool include_timing)
{
    nlohmann::json j;
    j["schema"] = kSuiteReportSchema;
    j["suite"] = r.suite;
    j["seed"] = r.seed;
    j["cases_run"] = r.cases_run;
    j["skipped"] = r.skipped;
    j["pass"] = r.pass();
    nlohmann::json checks = nlohmann::json::object();
    for (const auto& [name, t] : r.checks)
        checks[name] = {{"run", t.run}, {"violated", t.violated}};
    j["checks"] = checks;
    nlohmann::json viol = nlohmann::json::array();
    for (const auto& v : r.violations)
        viol.push_back({{"check", v.check}, {"input", v.input}, {"expected", v.expected}, {"got", v.got}});
    j["violations"] = viol;
    j["notes"] = r.notes;
    if (include_timing)
        j["elapsed_ms"] = r.elapsed_ms;
    return j;
}

namespace {

std::string one_line(std::string s)
{
    std::string out;
    for (char c : s) {
        if (c == '\n')
            out += "; ";
        else
            out += c;
    }
    return out;
}

}  // namespace

std::string summary(const SuiteReport& r, bool include_timing)
{
    std::ostringstream out;
    out << r.suite << ": " << (r.pass() ? "PASS" : "FAIL") << " (" << r.cases_run << " cases, " << r.skipped
        << " skipped, seed " << r.seed;
    if (include_timing)
        out << ", " << r.elapsed_ms << " ms";
    out << ")\n";
    for (const auto& [name, t] : r.checks)
        out << "  " << name << ": " << t.run << " checked, " << t.violated << " violated\n";
    std::size_t shown = 0;
    for (const auto& v : r.violations) {
        if (++shown > 5) {
            out << "  ... " << (r.violations.size() - 5) << " more violations\n";
            break;
        }
        out << "  violation [" << v.check << "] input=" << v.input << " expected=" << one_line(v.expected)
            << " got=" << one_line(v.got) << "\n";
    }
    for (const auto& n : r.notes)
        out << "  note: " << n << "\n";
    return out.str();
}

}  // namespace cohinv::harness
