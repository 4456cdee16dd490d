#include "cohinv/harness/config.hpp"

#include "cohinv/error.hpp"
#include "cohinv/factor.hpp"

#include <algorithm>
#include <thread>

namespace cohinv::harness {

int default_cases(const std::string& suite)
{
    static const std::map<std::string, int> defaults{
        {"sw-properties", 200}, {"diag-independence", 100}, {"mult-table", 50},
        {"beta-welldef", 50},   {"gl2-invariance", 20},     {"split-vanishing", 50},
        {"residue-lemma", 50},  {"steinberg", 500},         {"hilbert-oracle", 50},
    };
    auto it = defaults.find(suite);
    return it == defaults.end() ? 0 : it->second;
}

int Config::cases_for(const std::string& suite) const
{
    auto it = cases.find(suite);
    return it == cases.end() ? default_cases(suite) : it->second;
}

std::uint64_t Config::budget() const
{
    return factor_budget == 0 ? default_factor_budget() : factor_budget;
}

unsigned Config::thread_count() const
{
    if (threads != 0)
        return threads;
    return std::max(1u, std::thread::hardware_concurrency());
}

void Config::validate() const
{
    for (const auto& [suite, n] : cases)
        if (n <= 0)
            throw Error(ErrorKind::InvalidArgument, "case count for " + suite + " must be positive");
    if (height && *height <= 0)
        throw Error(ErrorKind::InvalidArgument, "height must be positive");
    for (int g : genus)
        if (g < 2)
            throw Error(ErrorKind::InvalidArgument, "genus must be at least 2");
}

}  // namespace cohinv::harness
