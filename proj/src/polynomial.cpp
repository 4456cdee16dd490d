#include "cohinv/polynomial.hpp"

#include "cohinv/error.hpp"

#include <algorithm>

namespace cohinv {

Polynomial::Polynomial(std::vector<Rational> ascending) : coeffs_(std::move(ascending))
{
    trim();
}

void Polynomial::trim()
{
    while (!coeffs_.empty() && coeffs_.back() == 0)
        coeffs_.pop_back();
}

Rational Polynomial::coefficient(int k) const
{
    return (k < 0 || k > degree()) ? Rational(0) : coeffs_[k];
}

Rational Polynomial::operator()(const Rational& x) const
{
    Rational acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
        acc = acc * x + *it;
    return acc;
}

Polynomial Polynomial::derivative() const
{
    std::vector<Rational> d;
    for (std::size_t k = 1; k < coeffs_.size(); ++k)
        d.push_back(coeffs_[k] * static_cast<unsigned long>(k));
    return Polynomial(std::move(d));
}

Polynomial Polynomial::monic() const
{
    if (is_zero())
        return *this;
    Polynomial out = *this;
    Rational lc = leading();
    for (auto& c : out.coeffs_)
        c /= lc;
    return out;
}

Polynomial Polynomial::shifted(const Rational& c) const
{
    // Horner in the ring: f(x+c) = (...(a_n (x+c) + a_{n-1})(x+c) + ...).
    Polynomial xc({c, Rational(1)});
    Polynomial acc;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
        acc = acc * xc + Polynomial::constant(*it);
    return acc;
}

Polynomial operator+(const Polynomial& a, const Polynomial& b)
{
    std::vector<Rational> out(std::max(a.coeffs_.size(), b.coeffs_.size()), Rational(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
        out[i] += a.coeffs_[i];
    for (std::size_t i = 0; i < b.coeffs_.size(); ++i)
        out[i] += b.coeffs_[i];
    return Polynomial(std::move(out));
}

Polynomial operator-(const Polynomial& a, const Polynomial& b)
{
    std::vector<Rational> out(std::max(a.coeffs_.size(), b.coeffs_.size()), Rational(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
        out[i] += a.coeffs_[i];
    for (std::size_t i = 0; i < b.coeffs_.size(); ++i)
        out[i] -= b.coeffs_[i];
    return Polynomial(std::move(out));
}

Polynomial operator*(const Polynomial& a, const Polynomial& b)
{
    if (a.is_zero() || b.is_zero())
        return {};
    std::vector<Rational> out(a.coeffs_.size() + b.coeffs_.size() - 1, Rational(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
            out[i + j] += a.coeffs_[i] * b.coeffs_[j];
    return Polynomial(std::move(out));
}

std::pair<Polynomial, Polynomial> Polynomial::divmod(const Polynomial& divisor) const
{
    if (divisor.is_zero())
        throw Error(ErrorKind::InvalidArgument, "polynomial division by zero");
    std::vector<Rational> rem = coeffs_;
    int dd = divisor.degree();
    std::vector<Rational> quo(std::max(0, degree() - dd + 1), Rational(0));
    for (int k = degree(); k >= dd; --k) {
        Rational f = rem[k] / divisor.leading();
        if (f == 0)
            continue;
        quo[k - dd] = f;
        for (int j = 0; j <= dd; ++j)
            rem[k - dd + j] -= f * divisor.coeffs_[j];
    }
    return {Polynomial(std::move(quo)), Polynomial(std::move(rem))};
}

Polynomial gcd(Polynomial a, Polynomial b)
{
    while (!b.is_zero()) {
        auto r = a.divmod(b).second;
        a = std::move(b);
        b = r.monic();
    }
    return a.monic();
}

bool is_squarefree(const Polynomial& f)
{
    return f.degree() >= 1 && gcd(f, f.derivative()).degree() == 0;
}

std::string to_string(const Polynomial& f)
{
    if (f.is_zero())
        return "0";
    std::string out;
    for (int k = f.degree(); k >= 0; --k) {
        const Rational& c = f.coefficients()[k];
        if (c == 0)
            continue;
        std::string mag = to_string(Rational(abs(c)));
        if (out.empty())
            out += c < 0 ? "-" : "";
        else
            out += c < 0 ? " - " : " + ";
        if (k == 0 || mag != "1")
            out += mag;
        if (k >= 1)
            out += (k == 0 || mag != "1") ? "*x" : "x";
        if (k >= 2)
            out += "^" + std::to_string(k);
    }
    return out;
}

}  // namespace cohinv
