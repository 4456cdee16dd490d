#include "cohinv/function_field.hpp"

#include "cohinv/error.hpp"

namespace cohinv {

LinearFactorElement::LinearFactorElement(Rational c, std::map<Rational, int> factors)
    : constant_(std::move(c)), factors_(std::move(factors))
{
    if (constant_ == 0)
        throw Error(ErrorKind::ZeroElement, "zero constant in a function-field element");
    std::erase_if(factors_, [](const auto& kv) { return kv.second == 0; });
}

int LinearFactorElement::valuation_at(const Rational& a) const
{
    auto it = factors_.find(a);
    return it == factors_.end() ? 0 : it->second;
}

namespace {

Rational rational_power(const Rational& base, int e)
{
    Rational out = 1;
    Rational b = e >= 0 ? base : Rational(1 / base);
    for (int i = 0; i < std::abs(e); ++i)
        out *= b;
    return out;
}

}  // namespace

Rational LinearFactorElement::evaluate(const Rational& b) const
{
    Rational out = constant_;
    for (const auto& [a, e] : factors_) {
        if (a == b)
            throw Error(ErrorKind::SpecializationAtPole, "t = " + to_string(b) + " is a root of " + to_string(*this));
        out *= rational_power(Rational(b - a), e);
    }
    return out;
}

Rational LinearFactorElement::leading_unit_at(const Rational& a) const
{
    Rational out = constant_;
    for (const auto& [root, e] : factors_)
        if (root != a)
            out *= rational_power(Rational(a - root), e);
    return out;
}

LinearFactorElement LinearFactorElement::reduced(std::uint64_t budget) const
{
    std::map<Rational, int> odd;
    for (const auto& [a, e] : factors_)
        if (e % 2 != 0)
            odd.emplace(a, 1);
    return {Rational(square_class(constant_, budget).representative()), std::move(odd)};
}

LinearFactorElement LinearFactorElement::operator*(const LinearFactorElement& other) const
{
    auto merged = factors_;
    for (const auto& [a, e] : other.factors_)
        merged[a] += e;
    return {Rational(constant_ * other.constant_), std::move(merged)};
}

std::strong_ordering operator<=>(const LinearFactorElement& a, const LinearFactorElement& b)
{
    if (int c = cmp(a.constant_, b.constant_); c != 0)
        return c < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
    auto ia = a.factors_.begin();
    auto ib = b.factors_.begin();
    for (; ia != a.factors_.end() && ib != b.factors_.end(); ++ia, ++ib) {
        if (int c = cmp(ia->first, ib->first); c != 0)
            return c < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
        if (ia->second != ib->second)
            return ia->second <=> ib->second;
    }
    return a.factors_.size() <=> b.factors_.size();
}

std::string to_string(const LinearFactorElement& e)
{
    std::string out;
    if (e.constant_term() != 1 || e.factors().empty())
        out = to_string(e.constant_term());
    for (const auto& [a, k] : e.factors()) {
        if (!out.empty())
            out += "*";
        std::string base = "t";
        if (a > 0)
            base = "(t-" + to_string(a) + ")";
        else if (a < 0)
            base = "(t+" + to_string(Rational(-a)) + ")";
        out += base;
        if (k != 1)
            out += "^" + std::to_string(k);
    }
    return out;
}

FunctionClass function_symbol(std::vector<LinearFactorElement> entries, std::uint64_t budget)
{
    for (auto& e : entries)
        e = e.reduced(budget);
    return FunctionClass::from_entries(std::move(entries));
}

FunctionClass constant_lift(const GradedClass& c)
{
    std::vector<FunctionSymbol> out;
    for (const auto& [d, syms] : c.components()) {
        for (const auto& s : syms) {
            std::vector<LinearFactorElement> entries;
            entries.reserve(s.entries().size());
            for (const auto& e : s.entries())
                entries.push_back(LinearFactorElement::constant(Rational(e.representative())));
            out.emplace_back(std::move(entries));
        }
    }
    return FunctionClass::from_symbols(std::move(out));
}

std::set<Rational> roots(const FunctionClass& c)
{
    std::set<Rational> out;
    for (const auto& [d, syms] : c.components())
        for (const auto& s : syms)
            for (const auto& e : s.entries())
                for (const auto& [a, k] : e.factors())
                    out.insert(a);
    return out;
}

GradedClass residue_at(const Rational& a, const FunctionClass& c, std::uint64_t budget)
{
    std::vector<Symbol> terms;
    for (const auto& [d, syms] : c.components()) {
        if (d == 0)
            continue;
        for (const auto& s : syms) {
            std::vector<std::size_t> ramified;
            std::vector<SquareClass> units;
            units.reserve(s.entries().size());
            for (std::size_t i = 0; i < s.entries().size(); ++i) {
                const auto& e = s.entries()[i];
                if (e.valuation_at(a) % 2 != 0)
                    ramified.push_back(i);
                units.push_back(square_class(e.leading_unit_at(a), budget));
            }
            if (ramified.empty())
                continue;
            // Sum over nonempty subsets T of the ramified positions.
            const std::size_t k = ramified.size();
            for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << k); ++mask) {
                std::vector<bool> in_t(s.entries().size(), false);
                int t_size = 0;
                for (std::size_t j = 0; j < k; ++j) {
                    if (mask & (std::uint64_t{1} << j)) {
                        in_t[ramified[j]] = true;
                        ++t_size;
                    }
                }
                std::vector<SquareClass> entries(t_size - 1, SquareClass::minus_one());
                for (std::size_t i = 0; i < units.size(); ++i)
                    if (!in_t[i])
                        entries.push_back(units[i]);
                terms.emplace_back(std::move(entries));
            }
        }
    }
    return GradedClass::from_symbols(std::move(terms));
}

GradedClass specialize(const Rational& b, const FunctionClass& c, std::uint64_t budget)
{
    std::vector<Symbol> out;
    for (const auto& [d, syms] : c.components()) {
        for (const auto& s : syms) {
            std::vector<SquareClass> entries;
            entries.reserve(s.entries().size());
            for (const auto& e : s.entries())
                entries.push_back(square_class(e.evaluate(b), budget));
            out.emplace_back(std::move(entries));
        }
    }
    return GradedClass::from_symbols(std::move(out));
}

Rational specialization_point(const FunctionClass& c)
{
    auto rs = roots(c);
    Rational b = 0;
    while (rs.contains(b))
        b += 1;
    return b;
}

bool is_zero_fn(const FunctionClass& c, std::uint64_t budget)
{
    for (const auto& a : roots(c))
        if (!is_zero(residue_at(a, c, budget)))
            return false;
    return is_zero(specialize(specialization_point(c), c, budget));
}

std::string to_string(const FunctionClass& c)
{
    if (c.is_empty())
        return "0";
    std::string out;
    for (const auto& [d, syms] : c.components()) {
        for (const auto& s : syms) {
            if (!out.empty())
                out += " + ";
            if (s.degree() == 0) {
                out += "1";
                continue;
            }
            out += "{";
            for (std::size_t i = 0; i < s.entries().size(); ++i)
                out += (i ? "," : "") + to_string(s.entries()[i]);
            out += "}";
        }
    }
    return out;
}

}  // namespace cohinv
