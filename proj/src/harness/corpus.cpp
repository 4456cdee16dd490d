#include "cohinv/harness/corpus.hpp"

#include "cohinv/error.hpp"
#include "cohinv/hyperell.hpp"

#include <json.hpp>

#include <fstream>

namespace cohinv::harness {

using nlohmann::json;

CurveRecord parse_record(const std::string& line)
{
    json j;
    try {
        j = json::parse(line);
    } catch (const json::parse_error& e) {
        throw Error(ErrorKind::InvalidArgument, std::string("invalid JSON: ") + e.what());
    }
    if (!j.is_object())
        throw Error(ErrorKind::InvalidArgument, "record is not a JSON object");

    CurveRecord rec;
    if (!j.contains("id") || !j["id"].is_string())
        throw Error(ErrorKind::InvalidArgument, "missing string field 'id'");
    rec.id = j["id"].get<std::string>();
    if (!j.contains("genus") || !j["genus"].is_number_integer())
        throw Error(ErrorKind::InvalidArgument, "missing integer field 'genus'");
    rec.genus = j["genus"].get<int>();
    if (rec.genus < 2)
        throw Error(ErrorKind::InvalidArgument, "genus must be at least 2");
    if (!j.contains("coeffs") || !j["coeffs"].is_array())
        throw Error(ErrorKind::InvalidArgument, "missing array field 'coeffs'");
    for (const auto& c : j["coeffs"]) {
        if (!c.is_string())
            throw Error(ErrorKind::InvalidArgument, "coefficients must be strings \"n/d\"");
        rec.coeffs.push_back(parse_rational(c.get<std::string>()));
    }
    const std::size_t expected = 2 * static_cast<std::size_t>(rec.genus) + 3;
    if (rec.coeffs.size() != expected)
        throw Error(ErrorKind::InvalidArgument, "genus " + std::to_string(rec.genus) + " needs " +
                                                    std::to_string(expected) + " coefficients, got " +
                                                    std::to_string(rec.coeffs.size()));
    if (j.contains("tags")) {
        if (!j["tags"].is_array())
            throw Error(ErrorKind::InvalidArgument, "'tags' must be an array of strings");
        for (const auto& t : j["tags"]) {
            if (!t.is_string())
                throw Error(ErrorKind::InvalidArgument, "'tags' must be an array of strings");
            rec.tags.push_back(t.get<std::string>());
        }
    }

    bool any = false;
    for (const auto& c : rec.coeffs)
        any = any || c != 0;
    rec.rejected = !any || !smooth_check(BinaryForm(rec.coeffs));
    return rec;
}

Corpus ingest_corpus(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw Error(ErrorKind::IoError, "cannot read corpus file '" + path + "'");

    Corpus corpus;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.find_first_not_of(" \t\r") == std::string::npos)
            continue;
        try {
            corpus.records.push_back(parse_record(line));
        } catch (const Error& e) {
            corpus.diagnostics.push_back({lineno, e.what()});
        }
    }
    if (in.bad())
        throw Error(ErrorKind::IoError, "read error on '" + path + "'");
    if (corpus.records.empty())
        throw Error(ErrorKind::EmptyCorpus, "no valid records in '" + path + "'");
    return corpus;
}

}  // namespace cohinv::harness
