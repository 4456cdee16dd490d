// cohinv: mod-2 cohomological invariants of hyperelliptic curves over Q.
//
// Exit status: 0 success / all checks pass, 1 a suite found a violation,
// 2 input or configuration error.

#include "cohinv/error.hpp"
#include "cohinv/harness/corpus.hpp"
#include "cohinv/harness/invariants_report.hpp"
#include "cohinv/harness/random.hpp"
#include "cohinv/harness/suites.hpp"
#include "cohinv/hyperell.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

namespace {

using namespace cohinv;
using namespace cohinv::harness;

constexpr int kExitOk = 0;
constexpr int kExitViolation = 1;
constexpr int kExitInputError = 2;

class Output {
public:
    explicit Output(const std::string& path)
    {
        if (!path.empty()) {
            file_.open(path);
            if (!file_)
                throw Error(ErrorKind::IoError, "cannot write '" + path + "'");
        }
    }
    std::ostream& stream() { return file_.is_open() ? file_ : std::cout; }

private:
    std::ofstream file_;
};

std::vector<int> parse_int_list(const std::string& text)
{
    std::vector<int> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ','))
        out.push_back(std::stoi(item));
    return out;
}

int run_invariants(const std::string& coeffs, const std::string& point, bool json)
{
    BinaryForm f = parse_coeff_list(coeffs);
    std::optional<ProjectivePoint> p;
    if (!point.empty())
        p = parse_point(point);
    auto inv = compute_invariants(f, p);
    if (json)
        std::cout << invariants_to_json(f, inv).dump(2) << "\n";
    else
        std::cout << invariants_to_text(f, inv);
    return kExitOk;
}

int run_verify(const std::vector<std::string>& names, const Config& cfg, bool json, bool timing)
{
    Output out(cfg.output_path);
    bool all_pass = true;
    nlohmann::json reports = nlohmann::json::array();
    for (const auto& name : names) {
        auto report = run_suite(name, cfg);
        all_pass = all_pass && report.pass();
        if (json)
            reports.push_back(to_json(report, timing));
        else
            out.stream() << summary(report, timing);
    }
    if (json)
        out.stream() << (reports.size() == 1 ? reports[0] : reports).dump(2) << "\n";
    return all_pass ? kExitOk : kExitViolation;
}

int run_corpus(const std::string& path, const std::string& output)
{
    Corpus corpus = ingest_corpus(path);
    for (const auto& d : corpus.diagnostics)
        std::cerr << path << ":" << d.line << ": " << d.message << "\n";

    Output out(output);
    for (const auto& rec : corpus.records) {
        nlohmann::json line;
        if (rec.rejected) {
            line = {{"id", rec.id}, {"rejected", true}, {"reason", "NotSquarefree"}};
        } else {
            BinaryForm f(rec.coeffs);
            try {
                line = invariants_to_json(f, compute_invariants(f));
            } catch (const Error& e) {
                line = {{"error", std::string(to_string(e.kind()))}, {"message", e.what()}};
            }
            line["id"] = rec.id;
            if (!rec.tags.empty())
                line["tags"] = rec.tags;
        }
        out.stream() << line.dump() << "\n";
    }
    return corpus.diagnostics.empty() ? kExitOk : kExitInputError;
}

int run_random(std::uint64_t seed, int genus, int height, bool json)
{
    BinaryForm f = random_form(seed, genus, height);
    if (json) {
        nlohmann::json coeffs = nlohmann::json::array();
        for (const auto& c : f.coeffs())
            coeffs.push_back(to_string(c));
        nlohmann::json rec{{"id", "random-" + std::to_string(seed)}, {"genus", genus}, {"coeffs", coeffs}};
        std::cout << rec.dump() << "\n";
    } else {
        std::cout << to_string(f) << "\n";
    }
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"cohinv: mod-2 cohomological invariants of hyperelliptic curves over Q"};
    app.require_subcommand(1);

    std::string coeffs, point;
    bool json = false;
    auto* inv = app.add_subcommand("invariants", "Print alpha_0..alpha_{g+2}, tau and beta of a binary form");
    inv->add_option("--coeffs", coeffs, "Coefficients x_0,...,x_n (use --coeffs=... when x_0 is negative)")
        ->required()
        ->allow_extra_args(false);
    inv->add_option("--point", point, "Evaluation point p0:p1 for beta");
    inv->add_flag("--json", json, "Emit the JSON report");

    std::string suite, genus_list;
    int cases = 0, height = 0;
    bool no_timing = false;
    Config cfg;
    auto* verify = app.add_subcommand("verify", "Run a property suite (or 'all')");
    verify->add_option("suite", suite, "Suite name")->required();
    verify->add_option("--seed", cfg.seed, "Random seed (default 42)");
    verify->add_option("--cases", cases, "Case count");
    verify->add_option("--genus", genus_list, "Comma-separated even genera");
    verify->add_option("--height", height, "Coefficient height bound");
    verify->add_option("--threads", cfg.threads, "Worker threads (default: all cores)");
    verify->add_option("--out", cfg.output_path, "Write the report to a file");
    verify->add_flag("--json", json, "Emit JSON reports");
    verify->add_flag("--no-timing", no_timing, "Omit elapsed times from reports");

    auto* corpus = app.add_subcommand("corpus", "Corpus operations");
    corpus->require_subcommand(1);
    std::string corpus_path, corpus_out;
    auto* corpus_run = corpus->add_subcommand("run", "Evaluate invariants for every record of a JSON-lines corpus");
    corpus_run->add_option("file", corpus_path, "Corpus file")->required();
    corpus_run->add_option("--out", corpus_out, "Write JSON lines to a file");

    std::uint64_t seed = kDefaultSeed;
    int genus = 2, rheight = 10;
    auto* random = app.add_subcommand("random", "Print a seeded random smooth binary form");
    random->add_option("--seed", seed, "Seed")->required();
    random->add_option("--genus", genus, "Even genus")->required();
    random->add_option("--height", rheight, "Coefficient height bound")->required();
    random->add_flag("--json", json, "Emit a corpus JSON line");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitInputError;
    }

    try {
        if (*inv)
            return run_invariants(coeffs, point, json);
        if (*verify) {
            if (cases > 0)
                for (const auto& name : suite_names())
                    cfg.cases[name] = cases;
            if (height > 0)
                cfg.height = height;
            else if (verify->count("--height"))
                throw Error(ErrorKind::InvalidArgument, "height must be positive");
            if (!genus_list.empty())
                cfg.genus = parse_int_list(genus_list);
            std::vector<std::string> names = suite == "all" ? suite_names() : std::vector<std::string>{suite};
            return run_verify(names, cfg, json, !no_timing);
        }
        if (*corpus_run)
            return run_corpus(corpus_path, corpus_out);
        if (*random)
            return run_random(seed, genus, rheight, json);
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInputError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInputError;
    }
    return kExitInputError;
}
