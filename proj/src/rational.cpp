#include "cohinv/rational.hpp"

#include "cohinv/error.hpp"

#include <cctype>

namespace cohinv {

namespace {

bool valid_integer(std::string_view s)
{
    if (!s.empty() && (s.front() == '-' || s.front() == '+'))
        s.remove_prefix(1);
    if (s.empty())
        return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c)))
            return false;
    return true;
}

Integer integer_from(std::string_view s)
{
    if (s.front() == '+')
        s.remove_prefix(1);
    return Integer(std::string(s), 10);
}

}  // namespace

Rational parse_rational(std::string_view text)
{
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front())))
        text.remove_prefix(1);
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back())))
        text.remove_suffix(1);

    auto slash = text.find('/');
    std::string_view num = text.substr(0, slash);
    std::string_view den = slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
    if (!valid_integer(num) || !valid_integer(den) || den.front() == '-')
        throw Error(ErrorKind::InvalidArgument, "malformed rational '" + std::string(text) + "'");

    Integer d = integer_from(den);
    if (d == 0)
        throw Error(ErrorKind::InvalidArgument, "zero denominator in '" + std::string(text) + "'");
    Rational q(integer_from(num), d);
    q.canonicalize();
    return q;
}

std::string to_string(const Rational& q)
{
    if (q.get_den() == 1)
        return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

std::string to_string(const Integer& z)
{
    return z.get_str();
}

}  // namespace cohinv
