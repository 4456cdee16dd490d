#include "cohinv/decide.hpp"
#include "cohinv/harness/config.hpp"
#include "cohinv/harness/corpus.hpp"
#include "cohinv/harness/invariants_report.hpp"
#include "cohinv/harness/oracle.hpp"
#include "cohinv/harness/random.hpp"
#include "cohinv/harness/report.hpp"
#include "cohinv/harness/suites.hpp"
#include "cohinv/hilbert.hpp"
#include "cohinv/hyperell.hpp"
#include "helpers.hpp"

#include <filesystem>
#include <fstream>
#include <set>

using namespace cohinv;
using namespace cohinv::harness;

namespace {

std::string write_temp(const std::string& name, const std::string& content)
{
    auto path = std::filesystem::temp_directory_path() / ("cohinv_test_" + name);
    std::ofstream(path) << content;
    return path.string();
}

Config small(const std::string& suite, int cases)
{
    Config cfg;
    cfg.cases[suite] = cases;
    return cfg;
}

}  // namespace

TEST_SUITE("harness random")
{
    TEST_CASE("rng determinism and ranges")
    {
        Rng a(1), b(1), c(2);
        bool differs = false;
        for (int i = 0; i < 100; ++i) {
            auto x = a.next();
            CHECK(x == b.next());
            differs = differs || x != c.next();
        }
        CHECK(differs);
        Rng r(9);
        std::set<long> seen;
        for (int i = 0; i < 2000; ++i) {
            long v = r.uniform(-3, 3);
            CHECK(v >= -3);
            CHECK(v <= 3);
            seen.insert(v);
            CHECK(r.nonzero(5) != 0);
        }
        CHECK(seen.size() == 7);
        CHECK(derive_seed(42, 1, 2) == derive_seed(42, 1, 2));
        CHECK(derive_seed(42, 1, 2) != derive_seed(42, 1, 3));
        CHECK(derive_seed(42, 1, 2) != derive_seed(42, 2, 2));
    }

    TEST_CASE("random_form examples")
    {
        CHECK(random_form(1, 2, 10) == random_form(1, 2, 10));
        for (std::uint64_t s = 0; s < 30; ++s) {
            auto f = random_form(s, 2, 10);
            CHECK(smooth_check(f));
            CHECK(f.genus() == 2);
            for (const auto& c : f.coeffs()) {
                CHECK(c <= 10);
                CHECK(c >= -10);
            }
        }
        auto g4 = random_form(3, 4, 5);
        CHECK(g4.genus() == 4);
        CHECK(smooth_check(g4));
        auto inf = random_form_at_infinity(4, 2, 10);
        CHECK(inf.leading() == 0);
        CHECK(smooth_check(inf));
        CHECK_THROWS_KIND(random_form(1, 3, 10), ErrorKind::InvalidArgument);
        CHECK_THROWS_KIND(random_form(1, 2, 0), ErrorKind::InvalidArgument);
    }

    TEST_CASE("random algebraic objects")
    {
        Rng rng(5);
        for (int i = 0; i < 20; ++i) {
            auto e = random_etale(rng, 1 + i % 10, 20);
            CHECK(e.total_degree() == 1 + i % 10);
            CHECK(is_etale(e.factors()));
            CHECK(random_matrix2(rng).det() != 0);
            auto p = random_invertible(rng, 3);
            CHECK(SymmetricForm::identity(3).congruent(p).determinant() != 0);
        }
    }
}

TEST_SUITE("harness corpus")
{
    TEST_CASE("parse_record examples")
    {
        auto r = parse_record(R"({"id":"c1","genus":2,"coeffs":["-1","0","0","0","0","0","-1"]})");
        CHECK(r.id == "c1");
        CHECK(r.genus == 2);
        CHECK(r.coeffs.size() == 7);
        CHECK(r.coeffs[0] == -1);
        CHECK_FALSE(r.rejected);

        CHECK_THROWS_KIND(parse_record(R"({"id":"c2","genus":2,"coeffs":["1","0","0","0","0","1"]})"),
                          ErrorKind::InvalidArgument);
        CHECK_THROWS_KIND(parse_record("not json"), ErrorKind::InvalidArgument);
        CHECK_THROWS_KIND(parse_record(R"({"id":"c3","genus":2,"coeffs":[1,0,0,0,0,0,1]})"),
                          ErrorKind::InvalidArgument);

        auto bad = parse_record(R"({"id":"s","genus":2,"coeffs":["1","-2","1","0","1","-2","1"],"tags":["x"]})");
        CHECK(bad.rejected);
        CHECK(bad.tags == std::vector<std::string>{"x"});
        auto zero = parse_record(R"({"id":"z","genus":2,"coeffs":["0","0","0","0","0","0","0"]})");
        CHECK(zero.rejected);
        auto frac = parse_record(R"({"id":"f","genus":2,"coeffs":["1/2","0","0","0","0","0","-3/4"]})");
        CHECK(frac.coeffs[6] == q(-3, 4));
    }

    TEST_CASE("ingest_corpus")
    {
        auto path = write_temp("corpus.jsonl",
                               "{\"id\":\"c1\",\"genus\":2,\"coeffs\":[\"-1\",\"0\",\"0\",\"0\",\"0\",\"0\",\"-1\"]}\n"
                               "\n"
                               "{\"id\":\"c2\",\"genus\":2,\"coeffs\":[\"1\",\"0\",\"0\",\"0\",\"0\",\"1\"]}\n");
        auto c = ingest_corpus(path);
        REQUIRE(c.records.size() == 1);
        CHECK(c.records[0].id == "c1");
        REQUIRE(c.diagnostics.size() == 1);
        CHECK(c.diagnostics[0].line == 3);

        CHECK_THROWS_KIND(ingest_corpus(write_temp("empty.jsonl", "")), ErrorKind::EmptyCorpus);
        CHECK_THROWS_KIND(ingest_corpus("/nonexistent/cohinv/corpus.jsonl"), ErrorKind::IoError);
    }
}

TEST_SUITE("harness config")
{
    TEST_CASE("defaults and validation")
    {
        Config cfg;
        CHECK(cfg.seed == 42);
        CHECK(cfg.cases_for("sw-properties") == 200);
        CHECK(cfg.cases_for("steinberg") == 500);
        CHECK(cfg.cases_for("split-vanishing") == 50);
        cfg.cases["steinberg"] = 3;
        CHECK(cfg.cases_for("steinberg") == 3);
        CHECK(cfg.budget() > 0);
        CHECK(cfg.thread_count() >= 1);
        cfg.validate();
        cfg.cases["steinberg"] = 0;
        CHECK_THROWS_KIND(cfg.validate(), ErrorKind::InvalidArgument);
        Config h;
        h.height = 0;
        CHECK_THROWS_KIND(h.validate(), ErrorKind::InvalidArgument);
        Config g;
        g.genus = {1};
        CHECK_THROWS_KIND(g.validate(), ErrorKind::InvalidArgument);
    }
}

TEST_SUITE("harness oracle")
{
    TEST_CASE("squarefree part")
    {
        CHECK(HilbertOracle::squarefree_part(18) == 2);
        CHECK(HilbertOracle::squarefree_part(-12) == -3);
        CHECK(HilbertOracle::squarefree_part(1) == 1);
    }

    TEST_CASE("oracle agrees with the formulas on a small box")
    {
        HilbertOracle o(11);
        CHECK(o.primes() == std::vector<long>{2, 3, 5, 7, 11});
        for (long a = -12; a <= 12; ++a)
            for (long b = -12; b <= 12; ++b) {
                if (a == 0 || b == 0)
                    continue;
                CHECK(o.symbol(a, b, 0) == hilbert_symbol(q(a), q(b), Place::real()));
                for (long p : o.primes())
                    CHECK(o.symbol(a, b, p) == hilbert_symbol(q(a), q(b), Place::finite(p)));
            }
    }
}

TEST_SUITE("harness reports")
{
    TEST_CASE("class json round trip")
    {
        std::vector<GradedClass> cs{GradedClass(), GradedClass::unit(), degree_one(q(-6)),
                                    symbol_of({-1, -1}) + symbol_of({3, 5}), symbol_of({-1, -1, -1, -1})};
        for (const auto& c : cs) {
            auto j = class_to_json(c);
            auto back = class_from_json(nlohmann::json::parse(j.dump()));
            CHECK(formally_equal(back, c));
            CHECK(j["render"] == render(c));
        }
        CHECK_THROWS_KIND(class_from_json(nlohmann::json::object()), ErrorKind::InvalidArgument);
    }

    TEST_CASE("invariants json")
    {
        auto f = parse_coeff_list("-1,0,0,0,0,0,-1");
        auto j = invariants_to_json(f, compute_invariants(f));
        CHECK(j["schema"] == kInvariantsSchema);
        CHECK(j["genus"] == 2);
        CHECK(j["alpha"].size() == 5);
        CHECK(j["tau"]["render"] == "deg1: -1");
        CHECK(j["beta"]["render"] == "deg4: {-1,-1,-1,-1}");
        CHECK(j["beta"]["point"] == "1:0");

        auto s = parse_coeff_list("0,1,0,0,0,-1,0");
        auto js = invariants_to_json(s, compute_invariants(s));
        CHECK(js["tau"]["error"] == "OutsideU0");

        CHECK(parse_point("1:-2") == ProjectivePoint(q(1), q(-2)));
        CHECK_THROWS_KIND(parse_point("1"), ErrorKind::InvalidArgument);
        CHECK_THROWS_KIND(parse_coeff_list("1,2,x"), ErrorKind::InvalidArgument);
    }

    TEST_CASE("suite report serialization")
    {
        SuiteReport r;
        r.suite = "demo";
        r.seed = 7;
        r.cases_run = 3;
        r.checks["a"] = {3, 1};
        r.violations.push_back({"a", "in", "0", "deg1: 2\ndeg2: ramified at {2, 3}"});
        r.elapsed_ms = 12;
        auto j = to_json(r);
        CHECK(j["schema"] == kSuiteReportSchema);
        CHECK(j["pass"] == false);
        CHECK(j["elapsed_ms"] == 12);
        CHECK_FALSE(to_json(r, false).contains("elapsed_ms"));
        auto text = summary(r, false);
        CHECK(text.find("FAIL") != std::string::npos);
        CHECK(text.find("ms") == std::string::npos);
        CHECK(text.find("deg1: 2; deg2") != std::string::npos);
    }
}

TEST_SUITE("harness suites")
{
    TEST_CASE("suite names")
    {
        CHECK(suite_names().size() == 9);
        CHECK_THROWS_KIND(run_suite("no-such-suite", Config{}), ErrorKind::UnknownSuite);
    }

    TEST_CASE("steinberg passes")
    {
        auto r = run_suite("steinberg", small("steinberg", 100));
        CHECK(r.pass());
        CHECK(r.cases_run == 100);
    }

    TEST_CASE("split-vanishing passes at seed 7")
    {
        Config cfg;
        cfg.seed = 7;
        auto r = run_suite("split-vanishing", cfg);
        CHECK(r.pass());
        CHECK(r.cases_run >= 50);
    }

    TEST_CASE("reports are deterministic across thread counts")
    {
        Config one = small("diag-independence", 20);
        one.threads = 1;
        Config four = one;
        four.threads = 4;
        CHECK(to_json(run_suite("diag-independence", one), false) ==
              to_json(run_suite("diag-independence", four), false));
    }

    TEST_CASE("factorization failures are skips")
    {
        Config cfg = small("diag-independence", 10);
        cfg.factor_budget = 1;
        auto r = run_suite("diag-independence", cfg);
        CHECK(r.skipped + r.cases_run == 10);
        CHECK(r.pass());
    }

    TEST_CASE("violation witnesses reproduce")
    {
        Config cfg = small("mult-table", 10);
        cfg.genus = {2};
        auto r = run_suite("mult-table", cfg);
        REQUIRE_FALSE(r.violations.empty());
        for (const auto& v : r.violations) {
            REQUIRE(v.check.rfind("(2) ", 0) == 0);
            // input is "coeffs=<list> i=<k>"
            auto space = v.input.find(' ');
            auto f = parse_coeff_list(v.input.substr(7, space - 7));
            int i = std::stoi(v.input.substr(space + 3));
            auto got = curve_alpha(i, f) * beta(f);
            CHECK_FALSE(is_zero(got));
            CHECK(render(got) == v.got);
        }
    }
}
