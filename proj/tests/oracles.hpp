#pragma once

#include <gmpxx.h>

#include <cstdlib>
#include <vector>

// Independent reference computations for the unit and acceptance tests.
// They share no code with the library.
namespace oracle {

using Q = mpq_class;
using Poly = std::vector<Q>;  // ascending coefficients

inline void trim(Poly& p)
{
    while (!p.empty() && p.back() == 0)
        p.pop_back();
}

inline Poly poly_rem(Poly a, const Poly& b)
{
    trim(a);
    while (a.size() >= b.size() && !a.empty()) {
        Q f = a.back() / b.back();
        std::size_t shift = a.size() - b.size();
        for (std::size_t i = 0; i < b.size(); ++i)
            a[shift + i] -= f * b[i];
        trim(a);
    }
    return a;
}

inline int sign_at_plus_inf(const Poly& p) { return sgn(p.back()); }

inline int sign_at_minus_inf(const Poly& p)
{
    int s = sgn(p.back());
    return (p.size() - 1) % 2 == 0 ? s : -s;
}

// Number of distinct real roots of a squarefree polynomial, from the sign
// changes of its Sturm sequence at -inf and +inf.
inline int sturm_real_roots(Poly f)
{
    trim(f);
    Poly df;
    for (std::size_t i = 1; i < f.size(); ++i)
        df.push_back(f[i] * Q(static_cast<long>(i)));
    std::vector<Poly> seq{f, df};
    while (seq.back().size() > 1) {
        Poly r = poly_rem(seq[seq.size() - 2], seq.back());
        if (r.empty())
            break;
        for (auto& c : r)
            c = -c;
        seq.push_back(r);
    }
    auto changes = [&](bool plus) {
        int count = 0, last = 0;
        for (const auto& p : seq) {
            int s = plus ? sign_at_plus_inf(p) : sign_at_minus_inf(p);
            if (s != 0 && last != 0 && s != last)
                ++count;
            if (s != 0)
                last = s;
        }
        return count;
    };
    return changes(false) - changes(true);
}

// Tr(C^k) for k = 0..count-1, C the companion matrix of the monic f.
inline std::vector<Q> companion_traces(const Poly& monic, int count)
{
    const std::size_t d = monic.size() - 1;
    std::vector<std::vector<Q>> c(d, std::vector<Q>(d, 0));
    for (std::size_t i = 1; i < d; ++i)
        c[i][i - 1] = 1;
    for (std::size_t i = 0; i < d; ++i)
        c[i][d - 1] = -monic[i];
    std::vector<std::vector<Q>> power(d, std::vector<Q>(d, 0));
    for (std::size_t i = 0; i < d; ++i)
        power[i][i] = 1;
    std::vector<Q> out;
    for (int k = 0; k < count; ++k) {
        Q tr = 0;
        for (std::size_t i = 0; i < d; ++i)
            tr += power[i][i];
        out.push_back(tr);
        std::vector<std::vector<Q>> next(d, std::vector<Q>(d, 0));
        for (std::size_t i = 0; i < d; ++i)
            for (std::size_t j = 0; j < d; ++j)
                for (std::size_t l = 0; l < d; ++l)
                    next[i][j] += power[i][l] * c[l][j];
        power = std::move(next);
    }
    return out;
}

inline long mod(long a, long m)
{
    long r = a % m;
    return r < 0 ? r + m : r;
}

// (a, b)_p for integers a, b with |a|, |b| squarefree and p in {2, 3, 5, 7},
// by searching a primitive solution of a x^2 + b y^2 = z^2 mod p^k.
// p = 0 stands for the real place.
inline int brute_hilbert(long a, long b, long p)
{
    if (p == 0)
        return (a < 0 && b < 0) ? -1 : 1;
    const long m = p == 2 ? 32 : p * p;
    for (long x = 0; x < m; ++x)
        for (long y = 0; y < m; ++y)
            for (long z = 0; z < m; ++z) {
                if (x % p == 0 && y % p == 0 && z % p == 0)
                    continue;
                if (mod(a * x * x + b * y * y - z * z, m) == 0)
                    return 1;
            }
    return -1;
}

inline bool squarefree_long(long n)
{
    n = std::labs(n);
    for (long d = 2; d * d <= n; ++d)
        if (n % (d * d) == 0)
            return false;
    return n != 0;
}

}  // namespace oracle
