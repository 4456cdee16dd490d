#include "cohinv/hyperell.hpp"

#include "cohinv/error.hpp"

namespace cohinv {

BinaryForm::BinaryForm(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs))
{
    if (coeffs_.size() < 7 || coeffs_.size() % 2 == 0)
        throw Error(ErrorKind::InvalidArgument,
                    "binary form needs an even degree n >= 6 (n+1 coefficients), got " +
                        std::to_string(coeffs_.size()) + " coefficients");
    bool any = false;
    for (const auto& c : coeffs_)
        any = any || c != 0;
    if (!any)
        throw Error(ErrorKind::InvalidArgument, "binary form is identically zero");
}

Polynomial BinaryForm::dehomogenized() const
{
    std::vector<Rational> asc(coeffs_.rbegin(), coeffs_.rend());
    return Polynomial(std::move(asc));
}

std::string to_string(const BinaryForm& f)
{
    std::string out;
    for (std::size_t i = 0; i < f.coeffs().size(); ++i)
        out += (i ? "," : "") + to_string(f.coeffs()[i]);
    return out;
}

Matrix2::Matrix2(Rational a, Rational b, Rational c, Rational d)
    : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)), d_(std::move(d))
{
    if (det() == 0)
        throw Error(ErrorKind::SingularMatrix, "matrix has zero determinant");
}

ProjectivePoint::ProjectivePoint(Rational p0, Rational p1) : p0_(std::move(p0)), p1_(std::move(p1))
{
    if (p0_ == 0 && p1_ == 0)
        throw Error(ErrorKind::InvalidArgument, "(0:0) is not a projective point");
}

std::string to_string(const ProjectivePoint& p)
{
    return to_string(p.p0()) + ":" + to_string(p.p1());
}

bool smooth_check(const BinaryForm& f)
{
    if (f.coeff(0) == 0 && f.coeff(1) == 0)
        return false;
    return is_squarefree(f.dehomogenized());
}

EtaleAlgebra weierstrass_algebra(const BinaryForm& f)
{
    if (!smooth_check(f))
        throw Error(ErrorKind::NotSquarefree, "binary form " + to_string(f) + " has a repeated root");
    if (f.leading() != 0)
        return EtaleAlgebra({f.dehomogenized()});
    return EtaleAlgebra({f.dehomogenized(), Polynomial::x()});
}

GradedClass curve_alpha(int i, const BinaryForm& f, std::uint64_t budget)
{
    return alpha(i, weierstrass_algebra(f), budget);
}

std::vector<GradedClass> curve_alphas(const BinaryForm& f, std::uint64_t budget)
{
    return alphas(weierstrass_algebra(f), budget);
}

namespace {

void require_even_genus(const BinaryForm& f)
{
    if (f.genus() % 2 != 0)
        throw Error(ErrorKind::OddGenusUnsupported,
                    "genus " + std::to_string(f.genus()) + " is odd; tau and beta need even genus");
}

}  // namespace

GradedClass tau(const BinaryForm& f, std::uint64_t budget)
{
    if (!smooth_check(f))
        throw Error(ErrorKind::NotSquarefree, "binary form " + to_string(f) + " has a repeated root");
    require_even_genus(f);
    if (f.leading() == 0)
        throw Error(ErrorKind::OutsideU0, "x_0 = 0: tau is only defined where the leading coefficient is nonzero");
    return degree_one(f.leading(), budget);
}

Rational eval_at_point(const BinaryForm& f, const ProjectivePoint& p)
{
    const int n = f.degree();
    // Powers of p0 and p1 up to n.
    std::vector<Rational> pow0(n + 1, Rational(1)), pow1(n + 1, Rational(1));
    for (int k = 1; k <= n; ++k) {
        pow0[k] = pow0[k - 1] * p.p0();
        pow1[k] = pow1[k - 1] * p.p1();
    }
    Rational acc = 0;
    for (int i = 0; i <= n; ++i)
        acc += f.coeff(i) * pow0[n - i] * pow1[i];
    return acc;
}

ProjectivePoint default_beta_point(const BinaryForm& f)
{
    if (f.leading() != 0)
        return {1, 0};
    ProjectivePoint candidate{0, 1};
    if (eval_at_point(f, candidate) != 0)
        return candidate;
    // f has at most n roots, so the scan terminates.
    for (long m = 1;; ++m) {
        for (long s : {m, -m}) {
            ProjectivePoint q{1, s};
            if (eval_at_point(f, q) != 0)
                return q;
        }
    }
}

GradedClass beta_from_alpha(const BinaryForm& f, const GradedClass& alpha_g1, const std::optional<ProjectivePoint>& p,
                            std::uint64_t budget)
{
    require_even_genus(f);
    ProjectivePoint point = p ? *p : default_beta_point(f);
    Rational value = eval_at_point(f, point);
    if (value == 0)
        throw Error(ErrorKind::PointOnWeierstrassDivisor,
                    "f vanishes at (" + to_string(point) + "), a Weierstrass point");
    return degree_one(value, budget) * alpha_g1;
}

GradedClass beta(const BinaryForm& f, const std::optional<ProjectivePoint>& p, std::uint64_t budget)
{
    require_even_genus(f);
    if (!smooth_check(f))
        throw Error(ErrorKind::NotSquarefree, "binary form " + to_string(f) + " has a repeated root");
    return beta_from_alpha(f, curve_alpha(f.genus() + 1, f, budget), p, budget);
}

namespace {

// Binary forms of degree k as coefficient vectors of l1^(k-j) l2^j.
std::vector<Rational> form_mul(const std::vector<Rational>& u, const std::vector<Rational>& v)
{
    std::vector<Rational> out(u.size() + v.size() - 1, Rational(0));
    for (std::size_t i = 0; i < u.size(); ++i)
        for (std::size_t j = 0; j < v.size(); ++j)
            out[i + j] += u[i] * v[j];
    return out;
}

}  // namespace

BinaryForm gl2_act(const Matrix2& a, const BinaryForm& f)
{
    const int n = f.degree();
    const int g = f.genus();
    // A^{-1}(l1, l2) = (d l1 - b l2, -c l1 + a l2) / det.
    const std::vector<Rational> first{a.d(), Rational(-a.b())};
    const std::vector<Rational> second{Rational(-a.c()), a.a()};

    std::vector<std::vector<Rational>> pow_first{{Rational(1)}}, pow_second{{Rational(1)}};
    for (int k = 1; k <= n; ++k) {
        pow_first.push_back(form_mul(pow_first.back(), first));
        pow_second.push_back(form_mul(pow_second.back(), second));
    }

    std::vector<Rational> out(n + 1, Rational(0));
    for (int i = 0; i <= n; ++i) {
        if (f.coeff(i) == 0)
            continue;
        auto term = form_mul(pow_first[n - i], pow_second[i]);
        for (int j = 0; j <= n; ++j)
            out[j] += f.coeff(i) * term[j];
    }

    // det^g * det^(-n) = det^(g-n).
    Rational scale = 1;
    Rational inv_det = 1 / a.det();
    for (int k = 0; k < n - g; ++k)
        scale *= inv_det;
    for (auto& c : out)
        c *= scale;
    return BinaryForm(std::move(out));
}

unsigned m_overlap(unsigned r, unsigned s)
{
    return r & s;
}

CurveInvariants compute_invariants(const BinaryForm& f, const std::optional<ProjectivePoint>& p, std::uint64_t budget)
{
    CurveInvariants out;
    out.genus = f.genus();
    auto all = curve_alphas(f, budget);
    const int top = out.genus + 2;
    for (int i = 0; i <= top; ++i)
        out.alpha.push_back(i < static_cast<int>(all.size()) ? all[i] : GradedClass{});

    try {
        out.tau = tau(f, budget);
    } catch (const Error& e) {
        if (e.kind() != ErrorKind::OutsideU0 && e.kind() != ErrorKind::OddGenusUnsupported)
            throw;
        out.tau_error = std::string(to_string(e.kind()));
    }

    try {
        if (out.genus % 2 == 0)
            out.beta_point = p ? *p : default_beta_point(f);
        out.beta = beta_from_alpha(f, all[out.genus + 1], p, budget);
    } catch (const Error& e) {
        if (e.kind() != ErrorKind::OddGenusUnsupported && e.kind() != ErrorKind::PointOnWeierstrassDivisor)
            throw;
        out.beta_error = std::string(to_string(e.kind()));
    }
    return out;
}

}  // namespace cohinv
