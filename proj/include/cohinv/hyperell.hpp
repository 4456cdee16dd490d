#pragma once

#include "cohinv/etale.hpp"
#include "cohinv/graded_class.hpp"
#include "cohinv/polynomial.hpp"

#include <optional>
#include <string>
#include <vector>

namespace cohinv {

/// f(l1, l2) = sum_i x_i l1^(n-i) l2^i with n even, n >= 6. The
/// hyperelliptic curve y^2 = f has genus g = n/2 - 1.
class BinaryForm {
public:
    /// Throws InvalidArgument unless the length is odd and >= 7 and some
    /// coefficient is nonzero.
    explicit BinaryForm(std::vector<Rational> coeffs);

    int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
    int genus() const noexcept { return degree() / 2 - 1; }
    const std::vector<Rational>& coeffs() const noexcept { return coeffs_; }
    const Rational& coeff(int i) const { return coeffs_.at(i); }
    const Rational& leading() const { return coeffs_.front(); }

    /// f(x, 1) as a polynomial in x.
    Polynomial dehomogenized() const;

    friend bool operator==(const BinaryForm&, const BinaryForm&) = default;

private:
    std::vector<Rational> coeffs_;
};

std::string to_string(const BinaryForm& f);

/// [[a, b], [c, d]] with nonzero determinant.
class Matrix2 {
public:
    /// Throws SingularMatrix when ad - bc = 0.
    Matrix2(Rational a, Rational b, Rational c, Rational d);

    static Matrix2 identity() { return {1, 0, 0, 1}; }

    const Rational& a() const noexcept { return a_; }
    const Rational& b() const noexcept { return b_; }
    const Rational& c() const noexcept { return c_; }
    const Rational& d() const noexcept { return d_; }
    Rational det() const { return a_ * d_ - b_ * c_; }

    friend Matrix2 operator*(const Matrix2& x, const Matrix2& y)
    {
        return {x.a_ * y.a_ + x.b_ * y.c_, x.a_ * y.b_ + x.b_ * y.d_, x.c_ * y.a_ + x.d_ * y.c_,
                x.c_ * y.b_ + x.d_ * y.d_};
    }

private:
    Rational a_, b_, c_, d_;
};

/// (p0 : p1), not both zero.
class ProjectivePoint {
public:
    /// Throws InvalidArgument for (0 : 0).
    ProjectivePoint(Rational p0, Rational p1);

    const Rational& p0() const noexcept { return p0_; }
    const Rational& p1() const noexcept { return p1_; }

    friend bool operator==(const ProjectivePoint&, const ProjectivePoint&) = default;

private:
    Rational p0_, p1_;
};

std::string to_string(const ProjectivePoint& p);

/// f(x, 1) squarefree and (x_0, x_1) != (0, 0), i.e. no repeated root on P^1.
bool smooth_check(const BinaryForm& f);

/// The degree-n algebra of Weierstrass points: Q[x]/(f(x,1)) when
/// x_0 != 0, otherwise Q[x]/(f(x,1)) x Q with the Q factor for the root at
/// infinity. Throws NotSquarefree when f is not smooth.
EtaleAlgebra weierstrass_algebra(const BinaryForm& f);

GradedClass curve_alpha(int i, const BinaryForm& f, std::uint64_t budget = default_factor_budget());

/// alpha_0, ..., alpha_n from one diagonalization of the trace form.
std::vector<GradedClass> curve_alphas(const BinaryForm& f, std::uint64_t budget = default_factor_budget());

/// {x_0}. Throws NotSquarefree, OddGenusUnsupported or OutsideU0.
GradedClass tau(const BinaryForm& f, std::uint64_t budget = default_factor_budget());

/// f(p0, p1)
Rational eval_at_point(const BinaryForm& f, const ProjectivePoint& p);

/// (1:0) when x_0 != 0, else the first of (0:1), (1:1), (1:-1), (1:2),
/// (1:-2), ... where f does not vanish.
ProjectivePoint default_beta_point(const BinaryForm& f);

/// {f(p)} * alpha_{g+1}(f), with p defaulting to default_beta_point(f).
/// Throws OddGenusUnsupported, NotSquarefree or PointOnWeierstrassDivisor.
GradedClass beta(const BinaryForm& f, const std::optional<ProjectivePoint>& p = std::nullopt,
                 std::uint64_t budget = default_factor_budget());

/// beta from an already computed alpha_{g+1}.
GradedClass beta_from_alpha(const BinaryForm& f, const GradedClass& alpha_g1,
                            const std::optional<ProjectivePoint>& p = std::nullopt,
                            std::uint64_t budget = default_factor_budget());

/// det(A)^g f(A^{-1}(l1, l2)).
BinaryForm gl2_act(const Matrix2& a, const BinaryForm& f);

/// sum of 2^k over the binary digits shared by r and s.
unsigned m_overlap(unsigned r, unsigned s);

/// Everything the CLI reports for one curve.
struct CurveInvariants {
    int genus = 0;
    /// alpha_0 .. alpha_{g+2}
    std::vector<GradedClass> alpha;
    /// Set unless the curve is outside U_0 or has odd genus.
    std::optional<GradedClass> tau;
    std::optional<std::string> tau_error;
    std::optional<GradedClass> beta;
    std::optional<std::string> beta_error;
    std::optional<ProjectivePoint> beta_point;
};

/// Throws NotSquarefree for non-smooth forms; tau/beta failures are
/// recorded in the *_error fields instead of thrown.
CurveInvariants compute_invariants(const BinaryForm& f, const std::optional<ProjectivePoint>& p = std::nullopt,
                                   std::uint64_t budget = default_factor_budget());

}  // namespace cohinv
