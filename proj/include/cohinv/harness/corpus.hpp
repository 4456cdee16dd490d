#pragma once

#include "cohinv/rational.hpp"

#include <string>
#include <vector>

namespace cohinv::harness {

struct CurveRecord {
    std::string id;
    int genus = 0;
    std::vector<Rational> coeffs;
    std::vector<std::string> tags;
    /// Set when the form fails smooth_check; the record is kept but flagged.
    bool rejected = false;
};

struct CorpusDiagnostic {
    std::size_t line = 0;  ///< 1-based
    std::string message;
};

struct Corpus {
    std::vector<CurveRecord> records;
    std::vector<CorpusDiagnostic> diagnostics;
};

/// Reads a JSON-lines corpus, one record per line:
///   {"id":"c1","genus":2,"coeffs":["-1","0","0","0","0","0","-1"],"tags":["witness"]}
/// Coefficients are strings "n" or "n/d". Blank lines are skipped;
/// malformed lines become diagnostics. Throws IoError when the file cannot
/// be read and EmptyCorpus when no valid record remains.
Corpus ingest_corpus(const std::string& path);

/// Parses a single line; throws Error(InvalidArgument) with a reason.
CurveRecord parse_record(const std::string& line);

}  // namespace cohinv::harness
