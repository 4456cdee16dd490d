#include "cohinv/decide.hpp"
#include "cohinv/harness/random.hpp"
#include "cohinv/hyperell.hpp"
#include "cohinv/polynomial.hpp"
#include "helpers.hpp"
#include "oracles.hpp"

using namespace cohinv;
using cohinv::harness::Rng;

namespace {

GradedClass sym(std::initializer_list<Rational> e) { return symbol_of(e); }

BinaryForm form(std::initializer_list<long> coeffs)
{
    std::vector<Rational> c;
    for (long v : coeffs)
        c.push_back(q(v));
    return BinaryForm(c);
}

// The binary form whose dehomogenization is prod (x - r).
BinaryForm from_roots(std::initializer_list<long> roots)
{
    Polynomial p = Polynomial::constant(q(1));
    for (long r : roots)
        p = p * Polynomial({q(-r), q(1)});
    std::vector<Rational> c(p.coefficients().rbegin(), p.coefficients().rend());
    return BinaryForm(c);
}

GradedClass minus_one_power(int k) { return degree_one(q(-1)).power(k); }

const BinaryForm witness = form({-1, 0, 0, 0, 0, 0, -1});
const BinaryForm split_form = form({0, 1, 0, 0, 0, -1, 0});

}  // namespace

TEST_SUITE("hyperell")
{
    TEST_CASE("binary form validation")
    {
        CHECK(witness.genus() == 2);
        CHECK(witness.degree() == 6);
        CHECK(form({1, 0, 0, 0, 0, 0, 0, 0, 1}).genus() == 3);
        CHECK_THROWS_KIND(form({1, 0, 0, 0, 1}), ErrorKind::InvalidArgument);
        CHECK_THROWS_KIND(form({1, 0, 0, 0, 0, 1}), ErrorKind::InvalidArgument);
        CHECK_THROWS_KIND(form({0, 0, 0, 0, 0, 0, 0}), ErrorKind::InvalidArgument);
        CHECK_THROWS_KIND(ProjectivePoint(q(0), q(0)), ErrorKind::InvalidArgument);
        CHECK_THROWS_KIND(Matrix2(q(1), q(2), q(2), q(4)), ErrorKind::SingularMatrix);
    }

    TEST_CASE("smooth_check examples")
    {
        CHECK(smooth_check(form({1, 0, 0, 0, 0, 0, 1})));
        // (x - 1)^2 (x^4 + 1)
        CHECK_FALSE(smooth_check(form({1, -2, 1, 0, 1, -2, 1})));
        CHECK_FALSE(smooth_check(form({0, 0, 1, 2, 3, 4, 5})));
        CHECK(smooth_check(split_form));
    }

    TEST_CASE("weierstrass_algebra examples")
    {
        auto w = weierstrass_algebra(form({1, 0, 0, 0, 0, 0, 1}));
        REQUIRE(w.factors().size() == 1);
        CHECK(w.factors()[0] == Polynomial({q(1), q(0), q(0), q(0), q(0), q(0), q(1)}));

        auto s = weierstrass_algebra(split_form);
        REQUIRE(s.factors().size() == 2);
        CHECK(s.factors()[0] == Polynomial({q(0), q(-1), q(0), q(0), q(0), q(1)}));
        CHECK(s.factors()[1] == Polynomial::x());
        CHECK(s.total_degree() == 6);

        CHECK_THROWS_KIND(weierstrass_algebra(form({1, -2, 1, 0, 1, -2, 1})), ErrorKind::NotSquarefree);
    }

    TEST_CASE("curve_alpha examples")
    {
        auto f = from_roots({1, 2, 3, 4, 5, 6});
        for (int i = 1; i <= 6; ++i)
            CHECK(is_zero(curve_alpha(i, f)));
        CHECK(is_zero(curve_alpha(3, split_form)));
        CHECK_FALSE(is_zero(curve_alpha(3, witness)));
        CHECK(equal(curve_alpha(0, witness), GradedClass::unit()));
        CHECK_THROWS_KIND(curve_alpha(7, witness), ErrorKind::IndexOutOfRange);
    }

    TEST_CASE("witness values")
    {
        auto a = curve_alphas(witness);
        CHECK(render(a[1]) == "deg1: -1");
        CHECK(render(a[2]) == "deg2: ramified at {2, Real}");
        CHECK(render(a[3]) == "deg3: {-1,-1,-1}");
        CHECK(render(tau(witness)) == "deg1: -1");
        CHECK(render(beta(witness)) == "deg4: {-1,-1,-1,-1}");
        // x^6 + 1 has no real roots, so the trace form has negative index 3
        CHECK(oracle::sturm_real_roots({q(1), q(0), q(0), q(0), q(0), q(0), q(1)}) == 0);
        CHECK(real_bit(a[3], 3));
    }

    TEST_CASE("tau examples")
    {
        CHECK(equal(tau(form({-1, 0, 0, 0, 0, 1, 1})), degree_one(q(-1))));
        CHECK(is_zero(tau(form({4, 0, 0, 0, 0, 0, 1}))));
        CHECK_THROWS_KIND(tau(split_form), ErrorKind::OutsideU0);
        CHECK_THROWS_KIND(tau(form({1, 0, 0, 0, 0, 0, 0, 0, 1})), ErrorKind::OddGenusUnsupported);
        CHECK_THROWS_KIND(tau(form({1, -2, 1, 0, 1, -2, 1})), ErrorKind::NotSquarefree);
    }

    TEST_CASE("beta examples")
    {
        CHECK_FALSE(is_zero(beta(witness)));
        CHECK(equal(beta(witness), degree_one(q(-1)) * curve_alpha(3, witness)));
        CHECK(is_zero(beta(form({1, 3, 0, -2, 0, 5, 7}))));
        CHECK(is_zero(beta(split_form)));
        CHECK_THROWS_KIND(beta(split_form, ProjectivePoint(q(1), q(1))), ErrorKind::PointOnWeierstrassDivisor);
        CHECK_THROWS_KIND(beta(form({1, 0, 0, 0, 0, 0, 0, 0, 1})), ErrorKind::OddGenusUnsupported);
    }

    TEST_CASE("default beta point")
    {
        CHECK(default_beta_point(witness) == ProjectivePoint(q(1), q(0)));
        // f(x, 1) = x^5 - x vanishes at 0, 1 and -1; next in the scan is (1:2)
        CHECK(default_beta_point(split_form) == ProjectivePoint(q(1), q(2)));
        // lambda_1 lambda_2^5 + lambda_2^6: (0:1) works
        CHECK(default_beta_point(form({0, 1, 0, 0, 0, 0, 1})) == ProjectivePoint(q(0), q(1)));
    }

    TEST_CASE("gl2_act examples")
    {
        auto f = form({3, 1, -2, 0, 5, 1, 2});
        CHECK(gl2_act(Matrix2::identity(), f) == f);
        CHECK(gl2_act(Matrix2(q(1), q(0), q(0), q(2)), f).coeff(0) == 12);
        auto r = gl2_act(Matrix2(q(0), q(1), q(1), q(0)), f);
        for (int i = 0; i <= 6; ++i)
            CHECK(r.coeff(i) == f.coeff(6 - i));
    }

    TEST_CASE("gl2_act is an action")
    {
        Rng rng(21);
        auto f = harness::random_form(5, 2, 6);
        for (int trial = 0; trial < 10; ++trial) {
            Matrix2 a = harness::random_matrix2(rng);
            Matrix2 b = harness::random_matrix2(rng);
            CHECK(gl2_act(a, gl2_act(b, f)) == gl2_act(a * b, f));
        }
    }

    TEST_CASE("m_overlap examples")
    {
        CHECK(m_overlap(1, 2) == 0);
        CHECK(m_overlap(1, 1) == 1);
        CHECK(m_overlap(3, 5) == 1);
        CHECK(m_overlap(6, 7) == 6);
        CHECK(m_overlap(0, 9) == 0);
    }

    TEST_CASE("eval_at_point examples")
    {
        auto f = form({1, 0, 0, 0, 0, 0, 1});
        CHECK(eval_at_point(f, ProjectivePoint(q(1), q(1))) == 2);
        auto g = form({5, 1, 2, 3, 4, 5, 6});
        CHECK(eval_at_point(g, ProjectivePoint(q(1), q(0))) == 5);
        CHECK(eval_at_point(f, ProjectivePoint(q(2), q(2))) == 128);
        CHECK(square_class(eval_at_point(g, ProjectivePoint(q(3), q(-6)))) ==
              square_class(eval_at_point(g, ProjectivePoint(q(1), q(-2)))));
    }

    TEST_CASE("compute_invariants collects errors")
    {
        auto inv = compute_invariants(split_form);
        CHECK(inv.genus == 2);
        CHECK(inv.alpha.size() == 5);
        CHECK_FALSE(inv.tau.has_value());
        CHECK(inv.tau_error == std::optional<std::string>("OutsideU0"));
        REQUIRE(inv.beta.has_value());
        CHECK(is_zero(*inv.beta));
        CHECK(inv.beta_point == ProjectivePoint(q(1), q(2)));

        auto odd = compute_invariants(form({1, 0, 0, 0, 0, 0, 0, 0, 1}));
        CHECK(odd.alpha.size() == 6);
        CHECK(odd.tau_error == std::optional<std::string>("OddGenusUnsupported"));
        CHECK(odd.beta_error == std::optional<std::string>("OddGenusUnsupported"));
    }
}

TEST_SUITE("hyperell properties")
{
    TEST_CASE("GL2 invariance")
    {
        Rng rng(31);
        for (int trial = 0; trial < 6; ++trial) {
            auto f = harness::random_form(harness::derive_seed(31, 0, trial), 2, 5);
            auto a = curve_alphas(f);
            auto b = beta(f);
            for (int k = 0; k < 2; ++k) {
                Matrix2 m = harness::random_matrix2(rng);
                auto g = gl2_act(m, f);
                if (g.leading() == 0)
                    continue;
                auto ag = curve_alphas(g);
                for (int i = 0; i <= 4; ++i)
                    CHECK(equal(ag[i], a[i]));
                CHECK(equal(beta(g), b));
            }
        }
    }

    TEST_CASE("beta point independence")
    {
        for (int trial = 0; trial < 6; ++trial) {
            auto f = harness::random_form(harness::derive_seed(41, 0, trial), 2, 8);
            auto a3 = curve_alpha(3, f);
            std::vector<ProjectivePoint> pts;
            for (long x : {0L, 1L, -1L, 2L, 3L})
                for (long y : {1L, 2L})
                    if (eval_at_point(f, ProjectivePoint(q(x), q(y))) != 0)
                        pts.emplace_back(q(x), q(y));
            for (const auto& p : pts) {
                CHECK(equal(beta(f, p), beta(f)));
                for (const auto& r : pts)
                    CHECK(is_zero(degree_one(eval_at_point(f, p) * eval_at_point(f, r)) * a3));
            }
        }
    }

    TEST_CASE("split vanishing")
    {
        for (int g : {2, 4}) {
            for (int trial = 0; trial < 4; ++trial) {
                auto f = harness::random_form_at_infinity(harness::derive_seed(51, g, trial), g, 5);
                CHECK(f.leading() == 0);
                CHECK(is_zero(curve_alpha(g + 1, f)));
                CHECK(is_zero(beta(f)));
            }
        }
    }

    TEST_CASE("multiplication table at genus 2")
    {
        for (int trial = 0; trial < 5; ++trial) {
            auto f = harness::random_form(harness::derive_seed(61, 0, trial), 2, 10);
            const int g = 2;
            auto a = curve_alphas(f);
            auto A = [&](int i) {
                if (i <= g + 1)
                    return a[i];
                if (i == g + 2)
                    return degree_one(q(2)) * a[g + 1];
                return GradedClass();
            };
            for (int i = g + 2; i <= 2 * g + 2; ++i)
                CHECK(equal(a[i], A(i)));
            for (int r = 0; r <= g + 1; ++r)
                for (int s = 0; s <= g + 1; ++s) {
                    int m = static_cast<int>(m_overlap(r, s));
                    CHECK(equal(a[r] * a[s], minus_one_power(m) * A(r + s - m)));
                }
            auto b = beta(f);
            CHECK(equal(a[g + 1] * b, minus_one_power(g + 1) * b));
            CHECK(equal(b * b, minus_one_power(g + 2) * b));
            auto t = tau(f);
            CHECK(equal(t * t, degree_one(q(-1)) * t));
            for (int i = 1; i <= g; ++i) {
                int m = static_cast<int>(m_overlap(i, g + 1));
                CHECK(equal(a[i] * b, minus_one_power(m) * A(g + 1 + i - m) * t));
            }
        }
    }

    TEST_CASE("alpha_i beta need not vanish")
    {
        // 3 = 11 in binary contains 1 = 01, so alpha_1 alpha_3 = {-1} alpha_3
        // and alpha_1 beta = {-1} beta, nonzero at the real place here.
        auto a1b = curve_alpha(1, witness) * beta(witness);
        CHECK_FALSE(is_zero(a1b));
        CHECK(equal(a1b, minus_one_power(5)));
    }
}
