#pragma once

#include "cohinv/harness/config.hpp"
#include "cohinv/harness/report.hpp"

#include <string>
#include <vector>

namespace cohinv::harness {

/// sw-properties, diag-independence, mult-table, beta-welldef,
/// gl2-invariance, split-vanishing, residue-lemma, steinberg,
/// hilbert-oracle.
const std::vector<std::string>& suite_names();

/// Runs one property suite. Cases run concurrently; the report does not
/// depend on the thread count. A case that exhausts the factorization
/// budget is counted as skipped with a note. Throws Error(UnknownSuite).
SuiteReport run_suite(const std::string& name, const Config& cfg);

}  // namespace cohinv::harness
