#pragma once

#include "cohinv/rational.hpp"

#include <cstdint>
#include <utility>
#include <vector>

namespace cohinv {

/// Factoring work budget used when the caller does not pass one.
/// Read once from COHINV_FACTOR_BUDGET, falling back to 20'000'000.
std::uint64_t default_factor_budget();

struct PrimePower {
    Integer prime;
    unsigned exponent = 0;
};

/// Factorization of |n| (n != 0) into ascending prime powers.
///
/// Trial division by all primes below 10^6, then Brent's variant of
/// Pollard rho on each remaining composite cofactor, then stage-1 ECM when
/// rho stalls. `budget` bounds the total work (rho iterations plus ECM
/// ladder steps); exceeding it throws Error(FactorizationFailure).
std::vector<PrimePower> factor_integer(const Integer& n, std::uint64_t budget = default_factor_budget());

bool is_probable_prime(const Integer& n);

}  // namespace cohinv
