#include "cohinv/hilbert.hpp"

#include "cohinv/error.hpp"

namespace cohinv {

Place Place::finite(Integer p)
{
    if (!is_probable_prime(p))
        throw Error(ErrorKind::InvalidArgument, "place must be a prime, got " + p.get_str());
    Place v;
    v.real_ = false;
    v.prime_ = std::move(p);
    return v;
}

std::strong_ordering operator<=>(const Place& a, const Place& b)
{
    if (a.real_ != b.real_)
        return a.real_ ? std::strong_ordering::greater : std::strong_ordering::less;
    int c = cmp(a.prime_, b.prime_);
    return c < 0 ? std::strong_ordering::less : c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal;
}

std::string to_string(const Place& v)
{
    return v.is_real() ? "Real" : v.prime().get_str();
}

namespace {

// (u-1)/2 mod 2 and (u^2-1)/8 mod 2 for an odd integer u.
int epsilon(const Integer& u)
{
    return mpz_fdiv_ui(u.get_mpz_t(), 4) == 3 ? 1 : 0;
}

int omega(const Integer& u)
{
    unsigned long r = mpz_fdiv_ui(u.get_mpz_t(), 8);
    return (r == 3 || r == 5) ? 1 : 0;
}

}  // namespace

int hilbert_symbol(const SquareClass& a, const SquareClass& b, const Place& v)
{
    if (v.is_real())
        return (a.negative() && b.negative()) ? -1 : 1;

    const Integer& p = v.prime();
    // a = p^alpha u, b = p^beta w with u, w units and alpha, beta in {0, 1}.
    Integer u = a.representative();
    Integer w = b.representative();
    int alpha = a.contains(p) ? 1 : 0;
    int beta = b.contains(p) ? 1 : 0;
    if (alpha)
        mpz_divexact(u.get_mpz_t(), u.get_mpz_t(), p.get_mpz_t());
    if (beta)
        mpz_divexact(w.get_mpz_t(), w.get_mpz_t(), p.get_mpz_t());

    if (p == 2) {
        int e = epsilon(u) * epsilon(w) + alpha * omega(w) + beta * omega(u);
        return e % 2 == 0 ? 1 : -1;
    }

    int sign = 1;
    if (alpha && beta && mpz_fdiv_ui(p.get_mpz_t(), 4) == 3)
        sign = -sign;
    if (beta)
        sign *= mpz_legendre(u.get_mpz_t(), p.get_mpz_t());
    if (alpha)
        sign *= mpz_legendre(w.get_mpz_t(), p.get_mpz_t());
    return sign;
}

int hilbert_symbol(const Rational& a, const Rational& b, const Place& v)
{
    return hilbert_symbol(square_class(a), square_class(b), v);
}

}  // namespace cohinv
