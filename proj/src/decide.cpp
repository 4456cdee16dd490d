#include "cohinv/decide.hpp"

#include <set>
#include <sstream>

namespace cohinv {

namespace {

bool degree0_bit(const std::vector<Symbol>& syms)
{
    return syms.size() % 2 == 1;
}

SquareClass degree1_product(const std::vector<Symbol>& syms)
{
    SquareClass acc;
    for (const auto& s : syms)
        acc = acc * s.entries().front();
    return acc;
}

std::vector<Place> degree2_ramification(const std::vector<Symbol>& syms)
{
    std::set<Integer> odd;
    for (const auto& s : syms)
        for (const auto& e : s.entries())
            for (const auto& p : e.odd_primes())
                if (p != 2)
                    odd.insert(p);

    std::vector<Place> candidates;
    candidates.push_back(Place::finite(2));
    for (const auto& p : odd)
        candidates.push_back(Place::finite(p));
    candidates.push_back(Place::real());

    std::vector<Place> ramified;
    for (const auto& v : candidates) {
        int local = 1;
        for (const auto& s : syms)
            local *= hilbert_symbol(s.entries()[0], s.entries()[1], v);
        if (local == -1)
            ramified.push_back(v);
    }
    return ramified;
}

bool higher_real_bit(const std::vector<Symbol>& syms)
{
    bool bit = false;
    for (const auto& s : syms) {
        bool all_negative = true;
        for (const auto& e : s.entries())
            all_negative = all_negative && e.negative();
        bit ^= all_negative;
    }
    return bit;
}

bool component_is_zero(int d, const std::vector<Symbol>& syms)
{
    switch (d) {
    case 0: return !degree0_bit(syms);
    case 1: return degree1_product(syms).is_trivial();
    case 2: return degree2_ramification(syms).empty();
    default: return !higher_real_bit(syms);
    }
}

}  // namespace

bool is_zero(const GradedClass& c)
{
    for (const auto& [d, syms] : c.components())
        if (!component_is_zero(d, syms))
            return false;
    return true;
}

bool equal(const GradedClass& a, const GradedClass& b)
{
    return is_zero(a + b);
}

bool is_zero_in_degree(const GradedClass& c, int d)
{
    auto it = c.components().find(d);
    return it == c.components().end() || component_is_zero(d, it->second);
}

std::vector<Place> ramified_places(const GradedClass& c)
{
    auto it = c.components().find(2);
    if (it == c.components().end())
        return {};
    return degree2_ramification(it->second);
}

bool real_bit(const GradedClass& c, int d)
{
    auto it = c.components().find(d);
    if (it == c.components().end())
        return false;
    if (d == 0)
        return degree0_bit(it->second);
    return higher_real_bit(it->second);
}

std::string render(const GradedClass& c)
{
    std::vector<std::string> lines;
    for (const auto& [d, syms] : c.components()) {
        std::ostringstream line;
        switch (d) {
        case 0:
            if (degree0_bit(syms))
                line << "deg0: 1";
            break;
        case 1: {
            auto sc = degree1_product(syms);
            if (!sc.is_trivial())
                line << "deg1: " << to_string(sc);
            break;
        }
        case 2: {
            auto places = degree2_ramification(syms);
            if (!places.empty()) {
                line << "deg2: ramified at {";
                for (std::size_t i = 0; i < places.size(); ++i)
                    line << (i ? ", " : "") << to_string(places[i]);
                line << "}";
            }
            break;
        }
        default:
            if (higher_real_bit(syms)) {
                line << "deg" << d << ": {";
                for (int i = 0; i < d; ++i)
                    line << (i ? "," : "") << "-1";
                line << "}";
            }
        }
        if (!line.str().empty())
            lines.push_back(line.str());
    }
    if (lines.empty())
        return "0";
    std::string out;
    for (std::size_t i = 0; i < lines.size(); ++i)
        out += (i ? "\n" : "") + lines[i];
    return out;
}

std::string to_string(const GradedClass& c)
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
