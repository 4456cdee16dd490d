#include "cohinv/factor.hpp"

#include "cohinv/error.hpp"

#include <algorithm>
#include <cstdlib>
#include <string>

namespace cohinv {

namespace {

constexpr std::uint32_t kTrialBound = 1'000'000;
constexpr std::uint64_t kDefaultBudget = 20'000'000;
// Rho gets this many iterations per composite before handing over to ECM.
constexpr std::uint64_t kRhoShare = 200'000;

const std::vector<std::uint32_t>& small_primes()
{
    static const std::vector<std::uint32_t> primes = [] {
        std::vector<bool> composite(kTrialBound, false);
        std::vector<std::uint32_t> out;
        for (std::uint32_t i = 2; i < kTrialBound; ++i) {
            if (composite[i])
                continue;
            out.push_back(i);
            for (std::uint64_t j = std::uint64_t(i) * i; j < kTrialBound; j += i)
                composite[j] = true;
        }
        return out;
    }();
    return primes;
}

// Brent's cycle-finding variant of Pollard rho. Returns a nontrivial
// factor of the odd composite n, consuming iterations from `budget`.
Integer rho_split(const Integer& n, std::uint64_t& budget)
{
    for (unsigned long c = 1;; ++c) {
        Integer y = 2, x, q = 1, g = 1, ys, t;
        std::uint64_t r = 1;
        constexpr std::uint64_t m = 128;
        do {
            x = y;
            for (std::uint64_t i = 0; i < r; ++i) {
                y = (y * y + c) % n;
            }
            std::uint64_t k = 0;
            do {
                ys = y;
                std::uint64_t steps = std::min(m, r - k);
                if (budget < steps)
                    throw Error(ErrorKind::FactorizationFailure,
                                "Pollard rho budget exhausted on " + n.get_str());
                budget -= steps;
                for (std::uint64_t i = 0; i < steps; ++i) {
                    y = (y * y + c) % n;
                    t = x - y;
                    q = (q * abs(t)) % n;
                }
                mpz_gcd(g.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
                k += m;
            } while (k < r && g == 1);
            r *= 2;
        } while (g == 1);

        if (g == n) {
            // Backtrack one step at a time from the saved position.
            do {
                ys = (ys * ys + c) % n;
                t = abs(x - ys);
                mpz_gcd(g.get_mpz_t(), t.get_mpz_t(), n.get_mpz_t());
            } while (g == 1);
        }
        if (g != n)
            return g;
        // Degenerate cycle: retry with a new polynomial constant.
    }
}

// Lenstra ECM, stage 1 only, on Montgomery curves By^2 = x^3 + Ax^2 + x
// with Suyama's parametrization. Points are kept projectively as (X : Z).
class Ecm {
public:
    explicit Ecm(const Integer& n) : n_(n) {}

    // Returns a nontrivial factor or 0 when this curve found nothing.
    // Each ladder step is charged to `budget`.
    Integer run_curve(unsigned long sigma, std::uint32_t b1, std::uint64_t& budget)
    {
        Integer u = (Integer(sigma) * sigma - 5) % n_;
        Integer v = (Integer(4) * sigma) % n_;
        Integer x = (u * u * u) % n_;
        Integer z = (v * v * v) % n_;
        Integer vmu = v - u;
        Integer num = (vmu * vmu % n_) * vmu % n_ * ((3 * u + v) % n_) % n_;
        Integer den = (Integer(16) * x % n_) * v % n_;
        Integer g;
        mpz_gcd(g.get_mpz_t(), den.get_mpz_t(), n_.get_mpz_t());
        if (g != 1)
            return g == n_ ? Integer(0) : g;
        Integer inv;
        mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), n_.get_mpz_t());
        a24_ = num * inv % n_;

        for (std::uint32_t p : small_primes()) {
            if (p > b1)
                break;
            std::uint64_t q = p;
            while (q * p <= b1)
                q *= p;
            std::uint64_t bits = 0;
            for (std::uint64_t t = q; t; t >>= 1)
                ++bits;
            if (budget < bits)
                throw Error(ErrorKind::FactorizationFailure, "ECM budget exhausted on " + n_.get_str());
            budget -= bits;
            ladder(x, z, q);
        }
        mpz_gcd(g.get_mpz_t(), z.get_mpz_t(), n_.get_mpz_t());
        return (g == 1 || g == n_) ? Integer(0) : g;
    }

private:
    void dbl(Integer& x, Integer& z)
    {
        t1_ = x + z;
        t1_ = t1_ * t1_ % n_;
        t2_ = x - z;
        t2_ = t2_ * t2_ % n_;
        t3_ = t1_ - t2_;  // 4xz
        x = t1_ * t2_ % n_;
        z = t3_ * ((t2_ + a24_ * t3_) % n_) % n_;
    }

    // (xp : zp) <- P + Q given P - Q = (xd : zd).
    void add(Integer& xp, Integer& zp, const Integer& xq, const Integer& zq, const Integer& xd, const Integer& zd)
    {
        t1_ = (xp - zp) * (xq + zq) % n_;
        t2_ = (xp + zp) * (xq - zq) % n_;
        t3_ = t1_ + t2_;
        t4_ = t1_ - t2_;
        xp = zd * (t3_ * t3_ % n_) % n_;
        zp = xd * (t4_ * t4_ % n_) % n_;
    }

    void ladder(Integer& x, Integer& z, std::uint64_t k)
    {
        Integer x0 = x, z0 = z;
        Integer x1 = x, z1 = z;
        dbl(x1, z1);
        int top = 63;
        while (!((k >> top) & 1))
            --top;
        for (int i = top - 1; i >= 0; --i) {
            if ((k >> i) & 1) {
                add(x0, z0, x1, z1, x, z);
                dbl(x1, z1);
            } else {
                add(x1, z1, x0, z0, x, z);
                dbl(x0, z0);
            }
        }
        x = std::move(x0);
        z = std::move(z0);
    }

    Integer n_;
    Integer a24_, t1_, t2_, t3_, t4_;
};

Integer ecm_split(const Integer& n, std::uint64_t& budget)
{
    Ecm ecm(n);
    for (unsigned long curve = 0;; ++curve) {
        std::uint32_t b1 = curve < 25 ? 2'000 : curve < 115 ? 11'000 : 50'000;
        Integer f = ecm.run_curve(6 + curve, b1, budget);
        if (f != 0)
            return f;
    }
}

void split_into(const Integer& n, std::uint64_t& budget, std::vector<Integer>& out)
{
    if (n == 1)
        return;
    if (is_probable_prime(n)) {
        out.push_back(n);
        return;
    }
    if (mpz_perfect_square_p(n.get_mpz_t())) {
        Integer root;
        mpz_sqrt(root.get_mpz_t(), n.get_mpz_t());
        split_into(root, budget, out);
        split_into(root, budget, out);
        return;
    }
    Integer d;
    std::uint64_t rho_budget = std::min(budget, kRhoShare);
    const std::uint64_t granted = rho_budget;
    try {
        d = rho_split(n, rho_budget);
        budget -= granted - rho_budget;
    } catch (const Error&) {
        budget -= granted;
        d = ecm_split(n, budget);
    }
    split_into(d, budget, out);
    split_into(Integer(n / d), budget, out);
}

}  // namespace

std::uint64_t default_factor_budget()
{
    static const std::uint64_t budget = [] {
        if (const char* env = std::getenv("COHINV_FACTOR_BUDGET")) {
            char* end = nullptr;
            unsigned long long v = std::strtoull(env, &end, 10);
            if (end != env && *end == '\0' && v > 0)
                return static_cast<std::uint64_t>(v);
        }
        return kDefaultBudget;
    }();
    return budget;
}

bool is_probable_prime(const Integer& n)
{
    return n > 1 && mpz_probab_prime_p(n.get_mpz_t(), 30) != 0;
}

std::vector<PrimePower> factor_integer(const Integer& n, std::uint64_t budget)
{
    if (n == 0)
        throw Error(ErrorKind::ZeroElement, "cannot factor zero");

    Integer rest = abs(n);
    std::vector<PrimePower> result;
    for (std::uint32_t p : small_primes()) {
        if (rest == 1)
            break;
        if (Integer(p) * p > rest)
            break;
        if (mpz_divisible_ui_p(rest.get_mpz_t(), p)) {
            PrimePower pp{Integer(p), 0};
            while (mpz_divisible_ui_p(rest.get_mpz_t(), p)) {
                mpz_divexact_ui(rest.get_mpz_t(), rest.get_mpz_t(), p);
                ++pp.exponent;
            }
            result.push_back(std::move(pp));
        }
    }
    if (rest == 1)
        return result;

    std::vector<Integer> large;
    split_into(rest, budget, large);
    std::sort(large.begin(), large.end());
    for (auto& p : large) {
        if (!result.empty() && result.back().prime == p)
            ++result.back().exponent;
        else
            result.push_back({std::move(p), 1});
    }
    return result;
}

}  // namespace cohinv
