#include "cohinv/harness/oracle.hpp"

#include "cohinv/error.hpp"

#include <cstdlib>
#include <string>

namespace cohinv::harness {

HilbertOracle::HilbertOracle(long max_prime)
{
    for (long p = 2; p <= max_prime; ++p) {
        bool prime = true;
        for (long d = 2; d * d <= p; ++d)
            prime = prime && p % d != 0;
        if (!prime)
            continue;
        primes_.push_back(p);
        Table t;
        t.modulus = 1;
        for (int i = 0; i < (p == 2 ? 6 : 3); ++i)
            t.modulus *= p;
        t.is_square.assign(t.modulus, false);
        for (long z = 0; z < t.modulus; ++z)
            t.is_square[(z * z) % t.modulus] = true;
        tables_.emplace(p, std::move(t));
    }
}

long HilbertOracle::squarefree_part(long a)
{
    long sign = a < 0 ? -1 : 1;
    long m = std::labs(a);
    long out = 1;
    for (long d = 2; d * d <= m; ++d) {
        int e = 0;
        while (m % d == 0) {
            m /= d;
            ++e;
        }
        if (e % 2)
            out *= d;
    }
    return sign * out * m;
}

int HilbertOracle::symbol(long a, long b, long p) const
{
    if (a == 0 || b == 0)
        throw Error(ErrorKind::ZeroElement, "oracle needs nonzero entries");
    if (p == 0)
        return (a < 0 && b < 0) ? -1 : 1;

    auto it = tables_.find(p);
    if (it == tables_.end())
        throw Error(ErrorKind::InvalidArgument, "oracle has no table for " + std::to_string(p));
    const long mod = it->second.modulus;
    const auto& sq = it->second.is_square;
    const long sa = ((squarefree_part(a) % mod) + mod) % mod;
    const long sb = ((squarefree_part(b) % mod) + mod) % mod;

    // x a unit: scale to x = 1.
    for (long y = 0; y < mod; ++y)
        if (sq[(sa + sb * ((y * y) % mod)) % mod])
            return 1;
    // x divisible by p, y a unit: scale to y = 1.
    for (long x = 0; x < mod; x += p)
        if (sq[(sa * ((x * x) % mod) + sb) % mod])
            return 1;
    // x, y both divisible by p forces z^2 = 0 mod p, so z is not a unit and
    // the triple is not primitive.
    return -1;
}

}  // namespace cohinv::harness
