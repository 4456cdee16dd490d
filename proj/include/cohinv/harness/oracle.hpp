#pragma once

#include <map>
#include <vector>

namespace cohinv::harness {

/// Brute-force Hilbert symbols for small integers, independent of the
/// closed-form local formulas.
///
/// (a, b)_p = +1 iff z^2 = a x^2 + b y^2 has a primitive solution modulo
/// p^k, with k = 3 for odd p and k = 6 for p = 2. After reducing a and b
/// to squarefree values every partial derivative of a primitive solution
/// has valuation at most 1 (odd p) or 2 (p = 2), so Hensel's lemma lifts
/// any primitive solution mod p^(2v+1) to Q_p and these k suffice.
class HilbertOracle {
public:
    /// Precomputes square tables for every prime up to max_prime.
    explicit HilbertOracle(long max_prime);

    /// p == 0 selects the real place. a, b nonzero; p prime <= max_prime.
    int symbol(long a, long b, long p) const;

    const std::vector<long>& primes() const noexcept { return primes_; }

    /// Squarefree part by trial division, sign kept.
    static long squarefree_part(long a);

private:
    struct Table {
        long modulus = 0;
        std::vector<bool> is_square;
    };
    std::vector<long> primes_;
    std::map<long, Table> tables_;
};

}  // namespace cohinv::harness
