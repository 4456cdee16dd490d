#include "cohinv/harness/suites.hpp"

#include "cohinv/decide.hpp"
#include "cohinv/error.hpp"
#include "cohinv/function_field.hpp"
#include "cohinv/harness/oracle.hpp"
#include "cohinv/harness/random.hpp"
#include "cohinv/hyperell.hpp"

#include <atomic>
#include <chrono>
#include <functional>
#include <thread>

namespace cohinv::harness {

namespace {

// Collects the checks of one case.
class Recorder {
public:
    void check(const std::string& name, bool ok, const std::string& input, const std::string& expected,
               const std::function<std::string()>& got)
    {
        auto& t = checks[name];
        ++t.run;
        if (!ok) {
            ++t.violated;
            violations.push_back({name, input, expected, got()});
        }
    }

    void equal(const std::string& name, const GradedClass& lhs, const GradedClass& rhs, const std::string& input)
    {
        bool ok = cohinv::equal(lhs, rhs);
        auto& t = checks[name];
        ++t.run;
        if (!ok) {
            ++t.violated;
            violations.push_back({name, input, render(rhs), render(lhs)});
        }
    }

    void zero(const std::string& name, const GradedClass& c, const std::string& input)
    {
        equal(name, c, GradedClass{}, input);
    }

    std::map<std::string, CheckTally> checks;
    std::vector<Violation> violations;
    std::vector<std::string> notes;
    bool skipped = false;
};

using CaseBody = std::function<void(std::size_t, Recorder&)>;

SuiteReport run_cases(const std::string& name, const Config& cfg, std::size_t count, const CaseBody& body)
{
    auto start = std::chrono::steady_clock::now();
    std::vector<Recorder> results(count);
    std::atomic<std::size_t> next{0};

    auto worker = [&] {
        for (std::size_t i = next++; i < count; i = next++) {
            try {
                body(i, results[i]);
            } catch (const Error& e) {
                if (e.kind() != ErrorKind::FactorizationFailure)
                    throw;
                results[i] = Recorder{};
                results[i].skipped = true;
                results[i].notes.push_back("case " + std::to_string(i) + " skipped: " + e.what());
            }
        }
    };

    unsigned n_threads = std::min<std::size_t>(cfg.thread_count(), std::max<std::size_t>(count, 1));
    std::vector<std::exception_ptr> errors(n_threads);
    {
        std::vector<std::jthread> pool;
        for (unsigned t = 0; t < n_threads; ++t)
            pool.emplace_back([&, t] {
                try {
                    worker();
                } catch (...) {
                    errors[t] = std::current_exception();
                    next = count;
                }
            });
    }
    for (auto& e : errors)
        if (e)
            std::rethrow_exception(e);

    SuiteReport report;
    report.suite = name;
    report.seed = cfg.seed;
    for (auto& r : results) {
        if (r.skipped)
            ++report.skipped;
        else
            ++report.cases_run;
        for (auto& [check, t] : r.checks) {
            report.checks[check].run += t.run;
            report.checks[check].violated += t.violated;
        }
        for (auto& v : r.violations)
            report.violations.push_back(std::move(v));
        for (auto& n : r.notes)
            report.notes.push_back(std::move(n));
    }
    report.elapsed_ms =
        std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
    return report;
}

std::string describe(const EtaleAlgebra& e)
{
    std::string out;
    for (const auto& f : e.factors())
        out += (out.empty() ? "[" : ", ") + to_string(f);
    return out + "]";
}

std::string describe(const BinaryForm& f)
{
    return "coeffs=" + to_string(f);
}

std::string describe(const SymmetricForm& q)
{
    std::string out = "[";
    for (std::size_t i = 0; i < q.dim(); ++i) {
        out += i ? ",[" : "[";
        for (std::size_t j = 0; j < q.dim(); ++j)
            out += (j ? "," : "") + to_string(q(i, j));
        out += "]";
    }
    return out + "]";
}

GradedClass minus_one_power(unsigned k)
{
    return GradedClass::from_entries({SquareClass::minus_one()}).power(k);
}

std::vector<int> genera(const Config& cfg, std::vector<int> fallback)
{
    std::vector<int> out;
    for (int g : cfg.genus.empty() ? fallback : cfg.genus)
        if (g >= 2 && g % 2 == 0)
            out.push_back(g);
    return out;
}

// Curves per genus: the full count at genus 2, a fifth of it above.
std::size_t curves_for(int g, int cases)
{
    return g == 2 ? cases : std::max(1, cases / 5);
}

int default_height(const Config& cfg, int g)
{
    if (cfg.height)
        return *cfg.height;
    return g <= 2 ? 10 : 5;
}

// --- sw-properties -------------------------------------------------------

void check_sw_bounds(Recorder& rec, const EtaleAlgebra& e, const std::vector<GradedClass>& a)
{
    const int n = e.total_degree();
    const std::string input = describe(e);
    rec.check("alpha_0 = 1", is_zero(a[0] + GradedClass::unit()), input, "deg0: 1",
              [&] { return render(a[0]); });
    for (int i = n / 2 + 2; i <= n; ++i)
        rec.zero("(1) alpha_i = 0 for i > [n/2]+1", a[i], input + " i=" + std::to_string(i));
    const int k = n / 2 + 1;
    if (k <= n) {
        if (k % 2 == 0)
            rec.equal("(2) alpha_[n/2]+1 = {2} alpha_[n/2]", a[k], degree_one(2) * a[k - 1], input);
        else
            rec.zero("(2) alpha_[n/2]+1 = {2} alpha_[n/2]", a[k], input);
    }
}

SuiteReport sw_properties(const Config& cfg)
{
    const int height = cfg.height.value_or(20);
    const auto budget = cfg.budget();
    return run_cases("sw-properties", cfg, cfg.cases_for("sw-properties"), [&](std::size_t i, Recorder& rec) {
        Rng rng(derive_seed(cfg.seed, 1, i));
        const int n1 = static_cast<int>(rng.uniform(1, 6));
        const int n2 = static_cast<int>(rng.uniform(1, 10 - n1));
        EtaleAlgebra e1 = random_etale(rng, n1, height);
        EtaleAlgebra e2 = random_etale(rng, n2, height);
        EtaleAlgebra prod = algebra_product(e1, e2);

        auto a1 = alphas(e1, budget);
        auto a2 = alphas(e2, budget);
        auto ap = alphas(prod, budget);
        check_sw_bounds(rec, e1, a1);
        check_sw_bounds(rec, e2, a2);
        check_sw_bounds(rec, prod, ap);

        auto total = [](const std::vector<GradedClass>& a) {
            GradedClass t;
            for (const auto& c : a)
                t += c;
            return t;
        };

        const int n = prod.total_degree();
        rec.equal("(3) alpha_tot(Q^n) = 1", alpha_total(EtaleAlgebra::split(n), budget), GradedClass::unit(),
                  "n=" + std::to_string(n));

        Rational a = rng.nonzero(height * height);
        EtaleAlgebra quad({Polynomial({Rational(-a), Rational(0), Rational(1)})});
        rec.equal("(4) alpha_tot(Q[x]/(x^2-a)) = 1 + {a}", alpha_total(quad, budget),
                  GradedClass::unit() + degree_one(a, budget), "a=" + to_string(a));
        rec.equal("(4') alpha_tot(Q[x]/(x^2-a)) = 1 + {a} + {2,a}", alpha_total(quad, budget),
                  GradedClass::unit() + degree_one(a, budget) + degree_one(Rational(2), budget) * degree_one(a, budget),
                  "a=" + to_string(a));

        rec.equal("(5) alpha_tot(E x E') = alpha_tot(E) alpha_tot(E')", total(ap), total(a1) * total(a2),
                  describe(e1) + " x " + describe(e2));

        Rational shift = rng.uniform(-3, 3);
        std::vector<Polynomial> moved;
        for (const auto& f : e1.factors())
            moved.push_back(f.shifted(shift));
        rec.equal("presentation independence", alpha_total(EtaleAlgebra(moved), budget), total(a1),
                  describe(e1) + " shift=" + to_string(shift));
    });
}

// --- diag-independence ---------------------------------------------------

SuiteReport diag_independence(const Config& cfg)
{
    const int height = cfg.height.value_or(10);
    const auto budget = cfg.budget();
    return run_cases("diag-independence", cfg, cfg.cases_for("diag-independence"), [&](std::size_t i, Recorder& rec) {
        Rng rng(derive_seed(cfg.seed, 2, i));
        const auto n = static_cast<std::size_t>(rng.uniform(2, 6));
        SymmetricForm q = random_symmetric(rng, n, height);
        auto p = random_invertible(rng, n);
        SymmetricForm moved = q.congruent(p);
        auto d1 = diagonalize(q, budget);
        auto d2 = diagonalize(moved, budget);
        const std::string input = describe(q) + " P^T G P=" + describe(moved);
        for (std::size_t k = 0; k <= n; ++k)
            rec.equal("w_i(P^T G P) = w_i(G)", sw_class(static_cast<int>(k), d2), sw_class(static_cast<int>(k), d1),
                      input + " i=" + std::to_string(k));

        SquareClass prod;
        for (const auto& c : d1.classes)
            prod = prod * c;
        auto det = square_class(q.determinant(), budget);
        rec.check("prod lambda_i = det mod squares", prod == det, describe(q), to_string(det),
                  [&] { return to_string(prod); });

        // Whitney sum with a second random form.
        SymmetricForm other = random_symmetric(rng, static_cast<std::size_t>(rng.uniform(1, 3)), height);
        rec.equal("Whitney sum", sw_total(diagonalize(q.direct_sum(other), budget)),
                  sw_total(d1) * sw_total(diagonalize(other, budget)), describe(q) + " + " + describe(other));
    });
}

// --- mult-table ----------------------------------------------------------

SuiteReport mult_table(const Config& cfg)
{
    struct Job {
        int genus;
        std::size_t index;
    };
    std::vector<Job> jobs;
    const int cases = cfg.cases_for("mult-table");
    for (int g : genera(cfg, {2, 4}))
        for (std::size_t i = 0; i < curves_for(g, cases); ++i)
            jobs.push_back({g, i});
    const auto budget = cfg.budget();

    return run_cases("mult-table", cfg, jobs.size(), [&](std::size_t j, Recorder& rec) {
        const int g = jobs[j].genus;
        BinaryForm f = random_form(derive_seed(cfg.seed, 100 + g, jobs[j].index), g, default_height(cfg, g));
        const std::string input = describe(f);
        const auto computed = curve_alphas(f, budget);
        const int top = g + 1;

        // alpha_k with alpha_{g+2} := {2} alpha_{g+1} and alpha_{g+i} := 0 for i > 2.
        auto A = [&](int k) -> GradedClass {
            if (k <= top)
                return computed[k];
            if (k == top + 1)
                return degree_one(2) * computed[top];
            return GradedClass{};
        };
        for (int k = top + 1; k < static_cast<int>(computed.size()); ++k)
            rec.equal("computed alpha_k matches the extended table", computed[k], A(k),
                      input + " k=" + std::to_string(k));

        for (int r = 1; r <= top; ++r)
            for (int s = r; s <= top; ++s) {
                unsigned m = m_overlap(r, s);
                rec.equal("(1) alpha_r alpha_s = {-1}^m alpha_{r+s-m}", A(r) * A(s),
                          minus_one_power(m) * A(r + s - static_cast<int>(m)),
                          input + " r=" + std::to_string(r) + " s=" + std::to_string(s));
            }

        auto point = default_beta_point(f);
        GradedClass fp = degree_one(eval_at_point(f, point), budget);
        GradedClass b = fp * A(top);

        std::vector<int> others;
        for (int i = 1; i <= top + 1; ++i)
            if (i != top)
                others.push_back(i);
        for (int i : others)
            rec.zero("(2) alpha_i beta = 0 for i != g+1", A(i) * b, input + " i=" + std::to_string(i));

        for (int i = 0; i < top; ++i) {
            unsigned m = m_overlap(i, top);
            rec.equal("(2*) alpha_i beta = {-1}^m alpha_{g+1+i-m} {f(p)}", A(i) * b,
                      minus_one_power(m) * A(top + i - static_cast<int>(m)) * fp,
                      input + " i=" + std::to_string(i));
        }

        rec.equal("(3) alpha_{g+1} beta = {-1}^{g+1} beta", A(top) * b, minus_one_power(g + 1) * b, input);
        rec.equal("(4) beta beta = {-1}^{g+2} beta", b * b, minus_one_power(g + 2) * b, input);

        if (f.leading() != 0) {
            GradedClass t = tau(f, budget);
            rec.equal("tau^2 = {-1} tau", t * t, minus_one_power(1) * t, input);
        }
    });
}

// --- beta-welldef --------------------------------------------------------

SuiteReport beta_welldef(const Config& cfg)
{
    const auto budget = cfg.budget();
    const int g = genera(cfg, {2}).empty() ? 2 : genera(cfg, {2}).front();
    return run_cases("beta-welldef", cfg, cfg.cases_for("beta-welldef"), [&](std::size_t i, Recorder& rec) {
        BinaryForm f = random_form(derive_seed(cfg.seed, 3, i), g, default_height(cfg, g));
        Rng rng(derive_seed(cfg.seed, 4, i));
        const auto a = curve_alpha(g + 1, f, budget);

        std::vector<ProjectivePoint> points;
        std::vector<GradedClass> values;
        while (points.size() < 5) {
            long p0 = rng.uniform(-6, 6), p1 = rng.uniform(-6, 6);
            if (p0 == 0 && p1 == 0)
                continue;
            ProjectivePoint p(p0, p1);
            Rational v = eval_at_point(f, p);
            if (v == 0)
                continue;
            points.push_back(p);
            values.push_back(degree_one(v, budget));
        }
        for (std::size_t x = 0; x < points.size(); ++x)
            for (std::size_t y = x + 1; y < points.size(); ++y)
                rec.zero("{f(p) f(q)} alpha_{g+1} = 0", (values[x] + values[y]) * a,
                         describe(f) + " p=" + to_string(points[x]) + " q=" + to_string(points[y]));

        GradedClass b = beta_from_alpha(f, a, std::nullopt, budget);
        rec.equal("beta(p) = beta(default point)", values[0] * a, b, describe(f) + " p=" + to_string(points[0]));
    });
}

// --- gl2-invariance ------------------------------------------------------

SuiteReport gl2_invariance(const Config& cfg)
{
    const auto budget = cfg.budget();
    constexpr int kMatricesPerCurve = 5;
    struct Job {
        int genus;
        std::size_t index;
    };
    std::vector<Job> jobs;
    const int cases = cfg.cases_for("gl2-invariance");
    for (int g : genera(cfg, {2}))
        for (std::size_t i = 0; i < curves_for(g, cases); ++i)
            jobs.push_back({g, i});

    return run_cases("gl2-invariance", cfg, jobs.size(), [&](std::size_t j, Recorder& rec) {
        const int g = jobs[j].genus;
        BinaryForm f = random_form(derive_seed(cfg.seed, 200 + g, jobs[j].index), g, default_height(cfg, g));
        Rng rng(derive_seed(cfg.seed, 300 + g, jobs[j].index));
        const auto base = curve_alphas(f, budget);
        const auto b = beta_from_alpha(f, base[g + 1], std::nullopt, budget);

        for (int k = 0; k < kMatricesPerCurve; ++k) {
            Matrix2 a = random_matrix2(rng);
            BinaryForm moved = gl2_act(a, f);
            while (f.leading() != 0 && moved.leading() == 0) {
                a = random_matrix2(rng);
                moved = gl2_act(a, f);
            }
            const std::string input = describe(f) + " A=[[" + to_string(a.a()) + "," + to_string(a.b()) + "],[" +
                                      to_string(a.c()) + "," + to_string(a.d()) + "]]";
            const auto alpha = curve_alphas(moved, budget);
            for (int i = 0; i <= g + 2; ++i)
                rec.equal("alpha_i(A f) = alpha_i(f)", alpha[i], base[i], input + " i=" + std::to_string(i));
            rec.equal("beta(A f) = beta(f)", beta_from_alpha(moved, alpha[g + 1], std::nullopt, budget), b, input);
        }
    });
}

// --- split-vanishing -----------------------------------------------------

SuiteReport split_vanishing(const Config& cfg)
{
    const auto budget = cfg.budget();
    struct Job {
        int genus;
        std::size_t index;
    };
    std::vector<Job> jobs;
    const int cases = cfg.cases_for("split-vanishing");
    for (int g : genera(cfg, {2, 4}))
        for (std::size_t i = 0; i < curves_for(g, cases); ++i)
            jobs.push_back({g, i});

    return run_cases("split-vanishing", cfg, jobs.size(), [&](std::size_t j, Recorder& rec) {
        const int g = jobs[j].genus;
        BinaryForm f =
            random_form_at_infinity(derive_seed(cfg.seed, 400 + g, jobs[j].index), g, default_height(cfg, g));
        const auto a = curve_alpha(g + 1, f, budget);
        rec.zero("alpha_{g+1} = 0 when x_0 = 0", a, describe(f));
        rec.zero("beta = 0 when x_0 = 0", beta_from_alpha(f, a, std::nullopt, budget), describe(f));
    });
}

// --- residue-lemma -------------------------------------------------------

GradedClass random_constant_class(Rng& rng, int degree)
{
    GradedClass c;
    const int terms = static_cast<int>(rng.uniform(1, 3));
    for (int t = 0; t < terms; ++t) {
        std::vector<Rational> entries;
        for (int k = 0; k < degree; ++k)
            entries.push_back(rng.rational(30, 5));
        c += symbol_of(entries);
    }
    return c;
}

SuiteReport residue_lemma(const Config& cfg)
{
    const auto budget = cfg.budget();
    return run_cases("residue-lemma", cfg, cfg.cases_for("residue-lemma"), [&](std::size_t i, Recorder& rec) {
        Rng rng(derive_seed(cfg.seed, 5, i));
        const int degree = 1 + static_cast<int>(i % 4);
        GradedClass alpha = random_constant_class(rng, degree);
        FunctionClass lifted = constant_lift(alpha);
        const std::string input = "alpha=" + to_string(alpha);

        for (int k = 0; k < 3; ++k) {
            Rational a = rng.rational(10, 3);
            FunctionClass uni = function_symbol({LinearFactorElement::t_minus(a)}, budget);
            FunctionClass c = uni * lifted;
            rec.equal("d_{t=a}({t-a} alpha) = alpha", residue_at(a, c, budget), alpha,
                      input + " a=" + to_string(a));
            rec.check("is_zero_fn({t-a} alpha) = is_zero(alpha)", is_zero_fn(c, budget) == is_zero(alpha),
                      input + " a=" + to_string(a), is_zero(alpha) ? "true" : "false",
                      [&] { return is_zero(alpha) ? "false" : "true"; });

            // {t-a} (alpha + alpha') with alpha' = alpha after scaling an entry
            // by a square: zero over Q(t), so every specialization vanishes.
            Rational sq = rng.rational(5, 5);
            sq *= sq;
            FunctionClass twin;
            for (const auto& [d, syms] : alpha.components())
                for (const auto& s : syms) {
                    std::vector<LinearFactorElement> entries;
                    for (std::size_t e = 0; e < s.entries().size(); ++e) {
                        Rational v(s.entries()[e].representative());
                        entries.push_back(LinearFactorElement::constant(e == 0 ? Rational(v * sq) : v));
                    }
                    twin += function_symbol(std::move(entries), budget);
                }
            FunctionClass z = uni * (lifted + twin);
            rec.check("is_zero_fn detects the zero class", is_zero_fn(z, budget), input + " a=" + to_string(a),
                      "true", [] { return std::string("false"); });
            for (long b = -2; b <= 2; ++b) {
                if (Rational(b) == a)
                    continue;
                rec.zero("specialization of a zero class vanishes", specialize(Rational(b), z, budget),
                         input + " a=" + to_string(a) + " b=" + std::to_string(b));
            }
        }

        if (i % 5 == 0) {
            // Curve-level: alpha_{g+1} of a concrete curve, and the pencil
            // f_c = c l1^n + f_0 through a form with x_0 = 0.
            BinaryForm f = random_form(derive_seed(cfg.seed, 6, i), 2, 10);
            GradedClass a3 = curve_alpha(3, f, budget);
            FunctionClass c = function_symbol({LinearFactorElement::t_minus(0)}, budget) * constant_lift(a3);
            rec.equal("d_{t=0}({t} alpha_3(f)) = alpha_3(f)", residue_at(0, c, budget), a3, describe(f));

            BinaryForm f0 = random_form_at_infinity(derive_seed(cfg.seed, 7, i), 2, 10);
            rec.zero("alpha_3(f_0) = 0 at t = 0", curve_alpha(3, f0, budget), describe(f0));
            for (long cval : {1L, 2L, 3L, -1L, -2L}) {
                auto coeffs = f0.coeffs();
                coeffs[0] = cval;
                BinaryForm fc(coeffs);
                if (!smooth_check(fc))
                    continue;
                GradedClass ac = curve_alpha(3, fc, budget);
                rec.equal("beta(f_c) = {c} alpha_3(f_c)", beta_from_alpha(fc, ac, std::nullopt, budget),
                          degree_one(cval) * ac, describe(fc));
            }
        }
    });
}

// --- steinberg -----------------------------------------------------------

SuiteReport steinberg(const Config& cfg)
{
    const auto budget = cfg.budget();
    return run_cases("steinberg", cfg, cfg.cases_for("steinberg"), [&](std::size_t i, Recorder& rec) {
        Rng rng(derive_seed(cfg.seed, 8, i));
        Rational a = rng.rational(10000, 1000);
        Rational b = rng.rational(10000, 1000);
        const std::string input = "a=" + to_string(a);
        GradedClass ca = degree_one(a, budget);
        GradedClass m1 = minus_one_power(1);

        rec.zero("{a,-a} = 0", ca * degree_one(Rational(-a), budget), input);
        if (a != 1)
            rec.zero("{a,1-a} = 0", ca * degree_one(Rational(1 - a), budget), input);
        rec.equal("{a,a} = {-1,a}", ca * ca, m1 * ca, input);

        auto sa = square_class(a, budget);
        auto sb = square_class(b, budget);
        std::vector<Place> places{Place::real(), Place::finite(2)};
        const SquareClass sab = sa * sb;
        for (const auto& p : sab.odd_primes())
            if (p != 2)
                places.push_back(Place::finite(p));
        for (const auto& p : sa.odd_primes())
            if (p != 2 && sb.contains(p))
                places.push_back(Place::finite(p));
        int product = 1;
        for (const auto& v : places)
            product *= hilbert_symbol(sa, sb, v);
        rec.check("Hilbert reciprocity", product == 1, input + " b=" + to_string(b), "1",
                  [&] { return std::to_string(product); });

        const std::uint64_t form_seed = derive_seed(cfg.seed, 9, i);
        BinaryForm f = random_form(form_seed, 2, 10);
        for (std::uint64_t k = 1; f.leading() == 0; ++k)
            f = random_form(derive_seed(form_seed, 10, k), 2, 10);
        GradedClass t = tau(f, budget);
        rec.equal("tau^2 = {-1} tau", t * t, m1 * t, describe(f));
    });
}

// --- hilbert-oracle ------------------------------------------------------

SuiteReport hilbert_oracle(const Config& cfg)
{
    const long bound = cfg.cases_for("hilbert-oracle");
    HilbertOracle oracle(bound);
    std::vector<long> values;
    for (long a = -bound; a <= bound; ++a)
        if (a != 0)
            values.push_back(a);

    auto report = run_cases("hilbert-oracle", cfg, values.size(), [&](std::size_t i, Recorder& rec) {
        const long a = values[i];
        std::vector<Place> places{Place::real()};
        for (long p : oracle.primes())
            places.push_back(Place::finite(p));
        for (long b : values) {
            for (std::size_t k = 0; k < places.size(); ++k) {
                long p = k == 0 ? 0 : oracle.primes()[k - 1];
                int expected = oracle.symbol(a, b, p);
                int got = hilbert_symbol(Rational(a), Rational(b), places[k]);
                rec.check("hilbert_symbol = brute force", got == expected,
                          "a=" + std::to_string(a) + " b=" + std::to_string(b) + " v=" + to_string(places[k]),
                          std::to_string(expected), [&] { return std::to_string(got); });
            }
        }
    });
    return report;
}

using SuiteFn = SuiteReport (*)(const Config&);

const std::map<std::string, SuiteFn>& registry()
{
    static const std::map<std::string, SuiteFn> suites{
        {"sw-properties", sw_properties},     {"diag-independence", diag_independence},
        {"mult-table", mult_table},           {"beta-welldef", beta_welldef},
        {"gl2-invariance", gl2_invariance},   {"split-vanishing", split_vanishing},
        {"residue-lemma", residue_lemma},     {"steinberg", steinberg},
        {"hilbert-oracle", hilbert_oracle},
    };
    return suites;
}

}  // namespace

const std::vector<std::string>& suite_names()
{
    static const std::vector<std::string> names = [] {
        std::vector<std::string> out;
        for (const auto& [name, fn] : registry())
            out.push_back(name);
        return out;
    }();
    return names;
}

SuiteReport run_suite(const std::string& name, const Config& cfg)
{
    cfg.validate();
    auto it = registry().find(name);
    if (it == registry().end())
        throw Error(ErrorKind::UnknownSuite, "unknown suite '" + name + "'");
    return it->second(cfg);
}

}  // namespace cohinv::harness
