#pragma once

#include "cohinv/decide.hpp"
#include "cohinv/graded_class.hpp"

#include <compare>
#include <map>
#include <set>
#include <string>
#include <vector>

namespace cohinv {

/// c * prod (t - a)^e_a, an element of Q(t)* that splits into rational
/// linear factors.
class LinearFactorElement {
public:
    LinearFactorElement() : constant_(1) {}

    /// Throws ZeroElement when c == 0. Zero exponents are dropped.
    LinearFactorElement(Rational c, std::map<Rational, int> factors);

    static LinearFactorElement constant(Rational c) { return {std::move(c), {}}; }
    /// t - a
    static LinearFactorElement t_minus(const Rational& a) { return {Rational(1), {{a, 1}}}; }

    const Rational& constant_term() const noexcept { return constant_; }
    const std::map<Rational, int>& factors() const noexcept { return factors_; }

    /// Exponent of (t - a), zero when absent.
    int valuation_at(const Rational& a) const;

    /// Value at t = b. Throws SpecializationAtPole when b is a root.
    Rational evaluate(const Rational& b) const;

    /// Value at t = a of the element with its (t - a) power removed.
    Rational leading_unit_at(const Rational& a) const;

    /// Same square class, with the constant replaced by its squarefree
    /// representative and exponents reduced mod 2.
    LinearFactorElement reduced(std::uint64_t budget = default_factor_budget()) const;

    /// True for the element 1 (after reduction this means a square).
    bool is_trivial() const { return constant_ == 1 && factors_.empty(); }

    LinearFactorElement operator*(const LinearFactorElement& other) const;

    friend bool operator==(const LinearFactorElement& a, const LinearFactorElement& b)
    {
        return a.constant_ == b.constant_ && a.factors_ == b.factors_;
    }
    friend std::strong_ordering operator<=>(const LinearFactorElement& a, const LinearFactorElement& b);

private:
    Rational constant_;
    std::map<Rational, int> factors_;
};

std::string to_string(const LinearFactorElement& e);

/// Classes of Q(t) built from symbols whose entries are linear-factor
/// elements. Entries are stored reduced (see LinearFactorElement::reduced).
using FunctionSymbol = BasicSymbol<LinearFactorElement>;
using FunctionClass = BasicGradedClass<LinearFactorElement>;

/// {e_1, ..., e_d} over Q(t); entries are reduced on the way in.
FunctionClass function_symbol(std::vector<LinearFactorElement> entries,
                              std::uint64_t budget = default_factor_budget());

/// The image of a class of Q under Q -> Q(t).
FunctionClass constant_lift(const GradedClass& c);

/// Every rational root a appearing in some entry of c.
std::set<Rational> roots(const FunctionClass& c);

/// Tame residue at the place t = a, lowering degree by one.
///
/// Each entry is written (t-a)^e u with u(a) != 0 and the symbol is
/// expanded multilinearly; {pi,pi} = {-1,pi} collapses k copies of the
/// uniformizer to {-1}^(k-1) {pi}, whose residue is {-1}^(k-1) times the
/// remaining units evaluated at t = a.
GradedClass residue_at(const Rational& a, const FunctionClass& c,
                       std::uint64_t budget = default_factor_budget());

/// Substitutes t = b in every entry. Throws SpecializationAtPole when b is
/// a root of some entry.
GradedClass specialize(const Rational& b, const FunctionClass& c,
                       std::uint64_t budget = default_factor_budget());

/// Smallest integer b >= 0 that is not a root of any entry of c.
Rational specialization_point(const FunctionClass& c);

/// Decides vanishing in H^*(Q(t)) through the split exact sequence
/// 0 -> H^n(Q) -> H^n(Q(t)) -> (+)_a H^{n-1}(Q): all residues at the
/// roots vanish and the specialization at specialization_point(c)
/// vanishes.
bool is_zero_fn(const FunctionClass& c, std::uint64_t budget = default_factor_budget());

std::string to_string(const FunctionClass& c);

}  // namespace cohinv
