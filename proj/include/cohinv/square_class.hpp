#pragma once

#include "cohinv/factor.hpp"
#include "cohinv/rational.hpp"

#include <compare>
#include <string>
#include <vector>

namespace cohinv {

/// An element of Q*/(Q*)^2, i.e. a degree-one class {a}.
///
/// Stored as the signature of the squarefree integer representative: a
/// sign bit and the ascending list of primes appearing to an odd power.
class SquareClass {
public:
    /// The trivial class {1}.
    SquareClass() = default;

    /// Builds from a sign and primes; primes must be distinct primes.
    /// They are sorted here.
    SquareClass(bool negative, std::vector<Integer> odd_primes);

    static SquareClass minus_one() { return SquareClass(true, {}); }

    bool negative() const noexcept { return negative_; }
    const std::vector<Integer>& odd_primes() const noexcept { return primes_; }

    /// True for the identity element {1}.
    bool is_trivial() const noexcept { return !negative_ && primes_.empty(); }

    bool contains(const Integer& p) const;

    /// The squarefree integer representative.
    Integer representative() const;

    /// Group law of Q*/(Q*)^2.
    SquareClass operator*(const SquareClass& other) const;

    friend bool operator==(const SquareClass& a, const SquareClass& b);
    friend std::strong_ordering operator<=>(const SquareClass& a, const SquareClass& b);

private:
    bool negative_ = false;
    std::vector<Integer> primes_;
};

/// Square class of a nonzero rational. Throws ZeroElement for zero and
/// FactorizationFailure when the factor budget is exhausted.
SquareClass square_class(const Rational& q, std::uint64_t budget = default_factor_budget());
SquareClass square_class(const Integer& z, std::uint64_t budget = default_factor_budget());

std::string to_string(const SquareClass& c);

}  // namespace cohinv
