#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace cohinv::harness {

inline constexpr std::uint64_t kDefaultSeed = 42;

struct Config {
    std::uint64_t seed = kDefaultSeed;
    /// Per-suite case count overrides; suites fall back to default_cases().
    std::map<std::string, int> cases;
    /// Coefficient height bound for random forms and algebras. Unset means
    /// the suite default.
    std::optional<int> height;
    /// Genera exercised by curve suites. Empty means the suite default.
    std::vector<int> genus;
    std::uint64_t factor_budget = 0;  ///< 0: library default
    std::string output_path;           ///< empty: stdout
    unsigned threads = 0;              ///< 0: hardware concurrency

    int cases_for(const std::string& suite) const;
    std::uint64_t budget() const;
    unsigned thread_count() const;

    /// Throws Error(InvalidArgument) when a bound is not positive.
    void validate() const;
};

/// Default case counts, chosen to meet the acceptance thresholds.
int default_cases(const std::string& suite);

}  // namespace cohinv::harness
