#include "cohinv/harness/random.hpp"

#include "cohinv/error.hpp"

namespace cohinv::harness {

std::uint64_t Rng::next()
{
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

long Rng::uniform(long lo, long hi)
{
    auto span = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<long>(next() % span);
}

long Rng::nonzero(long bound)
{
    long v = uniform(1, bound);
    return (next() & 1) ? -v : v;
}

Rational Rng::rational(long num_bound, long den_bound)
{
    Rational q(nonzero(num_bound), uniform(1, den_bound));
    q.canonicalize();
    return q;
}

std::uint64_t derive_seed(std::uint64_t base, std::uint64_t tag, std::uint64_t index)
{
    Rng r(base ^ (tag * 0xd1b54a32d192ed03ULL));
    for (std::uint64_t i = 0; i <= index % 4; ++i)
        r.next();
    return r.next() ^ (index * 0x9e3779b97f4a7c15ULL);
}

namespace {

constexpr int kMaxAttempts = 1000;

BinaryForm generate(std::uint64_t seed, int g, int height, bool at_infinity)
{
    if (g < 2 || g % 2 != 0)
        throw Error(ErrorKind::InvalidArgument, "random_form needs an even genus >= 2");
    if (height < 1)
        throw Error(ErrorKind::InvalidArgument, "random_form needs height >= 1");
    Rng rng(seed);
    const int n = 2 * g + 2;
    for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
        std::vector<Rational> coeffs;
        coeffs.reserve(n + 1);
        for (int i = 0; i <= n; ++i)
            coeffs.emplace_back(rng.uniform(-height, height));
        if (at_infinity)
            coeffs[0] = 0;
        bool any = false;
        for (const auto& c : coeffs)
            any = any || c != 0;
        if (!any)
            continue;
        BinaryForm f(std::move(coeffs));
        if (smooth_check(f))
            return f;
    }
    throw Error(ErrorKind::GenerationFailure, "no smooth form after 1000 attempts");
}

}  // namespace

BinaryForm random_form(std::uint64_t seed, int g, int height)
{
    return generate(seed, g, height, false);
}

BinaryForm random_form_at_infinity(std::uint64_t seed, int g, int height)
{
    return generate(seed, g, height, true);
}

Polynomial random_squarefree(Rng& rng, int degree, int height)
{
    for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
        std::vector<Rational> c;
        for (int i = 0; i < degree; ++i)
            c.emplace_back(rng.uniform(-height, height));
        c.emplace_back(rng.nonzero(height));
        Polynomial f(std::move(c));
        if (is_squarefree(f))
            return f;
    }
    throw Error(ErrorKind::GenerationFailure, "no squarefree polynomial after 1000 attempts");
}

EtaleAlgebra random_etale(Rng& rng, int total_degree, int height)
{
    int parts = static_cast<int>(rng.uniform(1, std::min(3, total_degree)));
    std::vector<int> degrees(parts, 1);
    for (int rest = total_degree - parts; rest > 0; --rest)
        ++degrees[rng.uniform(0, parts - 1)];
    std::vector<Polynomial> factors;
    for (int d : degrees)
        factors.push_back(random_squarefree(rng, d, height));
    return EtaleAlgebra(std::move(factors));
}

Matrix2 random_matrix2(Rng& rng)
{
    for (;;) {
        Rational e[4];
        for (auto& x : e) {
            x = Rational(rng.uniform(-3, 3), rng.uniform(1, 2));
            x.canonicalize();
        }
        if (e[0] * e[3] - e[1] * e[2] != 0)
            return Matrix2(e[0], e[1], e[2], e[3]);
    }
}

std::vector<std::vector<Rational>> random_invertible(Rng& rng, std::size_t n)
{
    for (;;) {
        std::vector<std::vector<Rational>> p(n, std::vector<Rational>(n));
        for (auto& row : p)
            for (auto& x : row) {
                x = Rational(rng.uniform(-3, 3), rng.uniform(1, 3));
                x.canonicalize();
            }
        // Reject singular draws.
        auto m = p;
        bool singular = false;
        for (std::size_t k = 0; k < n && !singular; ++k) {
            std::size_t piv = k;
            while (piv < n && m[piv][k] == 0)
                ++piv;
            if (piv == n) {
                singular = true;
                break;
            }
            std::swap(m[piv], m[k]);
            for (std::size_t r = k + 1; r < n; ++r) {
                Rational f = m[r][k] / m[k][k];
                for (std::size_t c = k; c < n; ++c)
                    m[r][c] -= f * m[k][c];
            }
        }
        if (!singular)
            return p;
    }
}

SymmetricForm random_symmetric(Rng& rng, std::size_t n, int height)
{
    const bool zero_diagonal = n >= 2 && (rng.next() & 1);
    for (;;) {
        std::vector<std::vector<Rational>> rows(n, std::vector<Rational>(n, Rational(0)));
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i; j < n; ++j) {
                if (i == j && zero_diagonal)
                    continue;
                rows[i][j] = rows[j][i] = rng.uniform(-height, height);
            }
        SymmetricForm q(std::move(rows));
        if (q.determinant() != 0)
            return q;
    }
}

}  // namespace cohinv::harness
