#pragma once

#include "cohinv/rational.hpp"

#include <string>
#include <utility>
#include <vector>

namespace cohinv {

/// Dense univariate polynomial over Q with ascending coefficients and no
/// trailing zeros. The zero polynomial has no coefficients and degree -1.
class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(std::vector<Rational> ascending);

    static Polynomial x() { return Polynomial({Rational(0), Rational(1)}); }
    static Polynomial constant(Rational c) { return Polynomial({std::move(c)}); }

    int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const noexcept { return coeffs_.empty(); }
    const std::vector<Rational>& coefficients() const noexcept { return coeffs_; }
    Rational coefficient(int k) const;
    const Rational& leading() const { return coeffs_.back(); }

    Rational operator()(const Rational& x) const;

    Polynomial derivative() const;
    Polynomial monic() const;
    /// f(x + c)
    Polynomial shifted(const Rational& c) const;

    friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    friend bool operator==(const Polynomial&, const Polynomial&) = default;

    /// Quotient and remainder; divisor must be nonzero.
    std::pair<Polynomial, Polynomial> divmod(const Polynomial& divisor) const;

private:
    void trim();
    std::vector<Rational> coeffs_;
};

/// Monic gcd (zero when both are zero).
Polynomial gcd(Polynomial a, Polynomial b);

/// Nonconstant with gcd(f, f') = 1.
bool is_squarefree(const Polynomial& f);

std::string to_string(const Polynomial& f);

}  // namespace cohinv
