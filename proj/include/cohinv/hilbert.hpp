#pragma once

#include "cohinv/rational.hpp"
#include "cohinv/square_class.hpp"

#include <compare>
#include <string>

namespace cohinv {

/// A place of Q: the real place or a finite prime.
class Place {
public:
    static Place real() { return Place(); }
    /// p must be prime.
    static Place finite(Integer p);

    bool is_real() const noexcept { return real_; }
    const Integer& prime() const noexcept { return prime_; }

    friend bool operator==(const Place& a, const Place& b) { return a.real_ == b.real_ && a.prime_ == b.prime_; }
    /// Finite primes ascending, real place last.
    friend std::strong_ordering operator<=>(const Place& a, const Place& b);

private:
    Place() = default;
    bool real_ = true;
    Integer prime_ = 0;
};

std::string to_string(const Place& v);

/// Hilbert symbol (a, b)_v in {+1, -1} on square classes.
int hilbert_symbol(const SquareClass& a, const SquareClass& b, const Place& v);

/// Hilbert symbol of nonzero rationals; throws ZeroElement on zero input.
int hilbert_symbol(const Rational& a, const Rational& b, const Place& v);

}  // namespace cohinv
