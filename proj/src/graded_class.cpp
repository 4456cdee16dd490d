#include "cohinv/graded_class.hpp"

namespace cohinv {

GradedClass degree_one(const Rational& a, std::uint64_t budget)
{
    return GradedClass::from_entries({square_class(a, budget)});
}

GradedClass symbol_of(const std::vector<Rational>& entries, std::uint64_t budget)
{
    std::vector<SquareClass> sc;
    sc.reserve(entries.size());
    for (const auto& e : entries)
        sc.push_back(square_class(e, budget));
    return GradedClass::from_entries(std::move(sc));
}

GradedClass symbol_of(std::initializer_list<Rational> entries, std::uint64_t budget)
{
    return symbol_of(std::vector<Rational>(entries), budget);
}

}  // namespace cohinv
