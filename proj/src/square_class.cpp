#include "cohinv/square_class.hpp"

#include "cohinv/error.hpp"

#include <algorithm>

namespace cohinv {

SquareClass::SquareClass(bool negative, std::vector<Integer> odd_primes)
    : negative_(negative), primes_(std::move(odd_primes))
{
    std::sort(primes_.begin(), primes_.end());
}

bool SquareClass::contains(const Integer& p) const
{
    return std::binary_search(primes_.begin(), primes_.end(), p);
}

Integer SquareClass::representative() const
{
    Integer r = 1;
    for (const auto& p : primes_)
        r *= p;
    return negative_ ? Integer(-r) : r;
}

SquareClass SquareClass::operator*(const SquareClass& other) const
{
    SquareClass out;
    out.negative_ = negative_ != other.negative_;
    std::set_symmetric_difference(primes_.begin(), primes_.end(), other.primes_.begin(),
                                  other.primes_.end(), std::back_inserter(out.primes_));
    return out;
}

bool operator==(const SquareClass& a, const SquareClass& b)
{
    return a.negative_ == b.negative_ && a.primes_ == b.primes_;
}

std::strong_ordering operator<=>(const SquareClass& a, const SquareClass& b)
{
    if (a.negative_ != b.negative_)
        return a.negative_ ? std::strong_ordering::greater : std::strong_ordering::less;
    auto n = std::min(a.primes_.size(), b.primes_.size());
    for (std::size_t i = 0; i < n; ++i) {
        int c = cmp(a.primes_[i], b.primes_[i]);
        if (c != 0)
            return c < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
    }
    return a.primes_.size() <=> b.primes_.size();
}

SquareClass square_class(const Integer& z, std::uint64_t budget)
{
    if (z == 0)
        throw Error(ErrorKind::ZeroElement, "square class of zero");
    std::vector<Integer> odd;
    for (auto& pp : factor_integer(z, budget))
        if (pp.exponent % 2 == 1)
            odd.push_back(std::move(pp.prime));
    return SquareClass(z < 0, std::move(odd));
}

SquareClass square_class(const Rational& q, std::uint64_t budget)
{
    if (q == 0)
        throw Error(ErrorKind::ZeroElement, "square class of zero");
    // num/den and num*den agree modulo squares.
    return square_class(Integer(q.get_num() * q.get_den()), budget);
}

std::string to_string(const SquareClass& c)
{
    return c.representative().get_str();
}

}  // namespace cohinv
