#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include <json.hpp>

namespace cohinv::harness {

/// A self-contained counterexample: `input` is enough to recompute `got`.
struct Violation {
    std::string check;
    std::string input;
    std::string expected;
    std::string got;
};

struct CheckTally {
    std::uint64_t run = 0;
    std::uint64_t violated = 0;
};

inline constexpr const char* kSuiteReportSchema = "cohinv.suite-report/1";

struct SuiteReport {
    std::string suite;
    std::uint64_t seed = 0;
    std::uint64_t cases_run = 0;
    std::uint64_t skipped = 0;
    std::map<std::string, CheckTally> checks;
    std::vector<Violation> violations;
    std::vector<std::string> notes;
    std::int64_t elapsed_ms = 0;

    bool pass() const noexcept { return violations.empty(); }
};

/// Serializes with sorted keys. `include_timing = false` drops elapsed_ms,
/// which is the only field that differs between runs with the same Config.
nlohmann::json to_json(const SuiteReport& r, bool include_timing = true);

/// Human-readable summary, one line per check.
std::string summary(const SuiteReport& r, bool include_timing = true);

}  // namespace cohinv::harness
