#pragma once

#include "cohinv/square_class.hpp"

#include <algorithm>
#include <initializer_list>
#include <map>
#include <utility>
#include <vector>

namespace cohinv {

/// A Milnor symbol {a_1, ..., a_d} with entries kept sorted. Mod 2 the
/// symbol ring is commutative, so sorting does not change the class and
/// lets identical symbols cancel syntactically.
template <class Entry>
class BasicSymbol {
public:
    BasicSymbol() = default;

    explicit BasicSymbol(std::vector<Entry> entries) : entries_(std::move(entries))
    {
        std::sort(entries_.begin(), entries_.end());
    }

    int degree() const noexcept { return static_cast<int>(entries_.size()); }
    const std::vector<Entry>& entries() const noexcept { return entries_; }

    /// A symbol with a trivial entry is zero by multilinearity.
    bool has_trivial_entry() const
    {
        return std::any_of(entries_.begin(), entries_.end(), [](const Entry& e) { return e.is_trivial(); });
    }

    BasicSymbol operator*(const BasicSymbol& other) const
    {
        BasicSymbol out;
        out.entries_.reserve(entries_.size() + other.entries_.size());
        std::merge(entries_.begin(), entries_.end(), other.entries_.begin(), other.entries_.end(),
                   std::back_inserter(out.entries_));
        return out;
    }

    friend bool operator==(const BasicSymbol&, const BasicSymbol&) = default;
    friend auto operator<=>(const BasicSymbol&, const BasicSymbol&) = default;

private:
    std::vector<Entry> entries_;
};

/// Element of the mod-2 cohomology ring, held as a lazy formal sum of
/// symbols per degree. Equality is not syntactic: two classes are equal
/// when their sum is decided to be zero (see decide.hpp).
template <class Entry>
class BasicGradedClass {
public:
    using Symbol = BasicSymbol<Entry>;
    using Components = std::map<int, std::vector<Symbol>>;

    BasicGradedClass() = default;

    static BasicGradedClass unit() { return from_symbol(Symbol{}); }

    static BasicGradedClass from_symbol(Symbol s)
    {
        BasicGradedClass c;
        if (!s.has_trivial_entry())
            c.components_[s.degree()].push_back(std::move(s));
        return c;
    }

    static BasicGradedClass from_entries(std::vector<Entry> entries)
    {
        return from_symbol(Symbol(std::move(entries)));
    }

    /// Formal sum of the given symbols (with F_2 cancellation).
    static BasicGradedClass from_symbols(std::vector<Symbol> symbols)
    {
        BasicGradedClass c;
        for (auto& s : symbols)
            if (!s.has_trivial_entry())
                c.components_[s.degree()].push_back(std::move(s));
        c.normalize();
        return c;
    }

    const Components& components() const noexcept { return components_; }

    /// Syntactic zero: no symbols at all. Implies mathematical zero but not
    /// conversely.
    bool is_empty() const noexcept { return components_.empty(); }

    /// Number of symbols in the formal sum.
    std::size_t size() const noexcept
    {
        std::size_t n = 0;
        for (const auto& [d, syms] : components_)
            n += syms.size();
        return n;
    }

    /// The homogeneous part of degree d.
    BasicGradedClass component(int d) const
    {
        BasicGradedClass c;
        if (auto it = components_.find(d); it != components_.end())
            c.components_.emplace(d, it->second);
        return c;
    }

    BasicGradedClass& operator+=(const BasicGradedClass& other)
    {
        for (const auto& [d, syms] : other.components_) {
            auto& mine = components_[d];
            mine.insert(mine.end(), syms.begin(), syms.end());
        }
        normalize();
        return *this;
    }

    friend BasicGradedClass operator+(BasicGradedClass a, const BasicGradedClass& b)
    {
        a += b;
        return a;
    }

    /// Distributes over the formal sums; symbol products concatenate entries.
    friend BasicGradedClass operator*(const BasicGradedClass& a, const BasicGradedClass& b)
    {
        BasicGradedClass out;
        for (const auto& [da, sa] : a.components_) {
            for (const auto& [db, sb] : b.components_) {
                auto& target = out.components_[da + db];
                target.reserve(target.size() + sa.size() * sb.size());
                for (const auto& x : sa)
                    for (const auto& y : sb)
                        target.push_back(x * y);
            }
        }
        out.normalize();
        return out;
    }

    /// c^k, with c^0 the unit.
    BasicGradedClass power(unsigned k) const
    {
        BasicGradedClass out = unit();
        for (unsigned i = 0; i < k; ++i)
            out = out * *this;
        return out;
    }

    /// Syntactic comparison of the normalized formal sums.
    friend bool formally_equal(const BasicGradedClass& a, const BasicGradedClass& b)
    {
        return a.components_ == b.components_;
    }

private:
    // Sorts each component and cancels equal symbols pairwise.
    void normalize()
    {
        for (auto it = components_.begin(); it != components_.end();) {
            auto& syms = it->second;
            std::sort(syms.begin(), syms.end());
            std::vector<Symbol> kept;
            kept.reserve(syms.size());
            for (std::size_t i = 0; i < syms.size();) {
                std::size_t j = i;
                while (j < syms.size() && syms[j] == syms[i])
                    ++j;
                if ((j - i) % 2 == 1)
                    kept.push_back(std::move(syms[i]));
                i = j;
            }
            if (kept.empty()) {
                it = components_.erase(it);
            } else {
                syms = std::move(kept);
                ++it;
            }
        }
    }

    Components components_;
};

using Symbol = BasicSymbol<SquareClass>;
using GradedClass = BasicGradedClass<SquareClass>;

/// {a} for a nonzero rational.
GradedClass degree_one(const Rational& a, std::uint64_t budget = default_factor_budget());

/// {a_1, ..., a_d} for nonzero rationals.
GradedClass symbol_of(std::initializer_list<Rational> entries, std::uint64_t budget = default_factor_budget());
GradedClass symbol_of(const std::vector<Rational>& entries, std::uint64_t budget = default_factor_budget());

}  // namespace cohinv
