#include "cohinv/etale.hpp"

#include "cohinv/error.hpp"

namespace cohinv {

EtaleAlgebra::EtaleAlgebra(std::vector<Polynomial> factors)
{
    if (factors.empty())
        throw Error(ErrorKind::InvalidArgument, "an etale algebra needs at least one factor");
    for (auto& f : factors) {
        if (!is_squarefree(f))
            throw Error(ErrorKind::NotSquarefree, "factor " + to_string(f) + " is not squarefree and nonconstant");
        f = f.monic();
        degree_ += f.degree();
    }
    factors_ = std::move(factors);
}

EtaleAlgebra EtaleAlgebra::split(int n)
{
    if (n < 1)
        throw Error(ErrorKind::InvalidArgument, "split algebra needs n >= 1");
    return EtaleAlgebra(std::vector<Polynomial>(n, Polynomial::x()));
}

bool is_etale(const std::vector<Polynomial>& factors)
{
    if (factors.empty())
        return false;
    for (const auto& f : factors)
        if (!is_squarefree(f))
            return false;
    return true;
}

std::vector<Rational> power_sums(const Polynomial& monic, int count)
{
    // x^d + c_{d-1} x^{d-1} + ... + c_0; e_k = (-1)^k c_{d-k}.
    const int d = monic.degree();
    std::vector<Rational> p(count, Rational(0));
    if (count > 0)
        p[0] = d;
    for (int k = 1; k < count; ++k) {
        Rational acc = 0;
        for (int j = 1; j <= std::min(k - 1, d); ++j)
            acc += monic.coefficient(d - j) * p[k - j];
        if (k <= d)
            acc += monic.coefficient(d - k) * k;
        p[k] = -acc;
    }
    return p;
}

SymmetricForm trace_gram(const EtaleAlgebra& e)
{
    const int n = e.total_degree();
    std::vector<std::vector<Rational>> rows(n, std::vector<Rational>(n, Rational(0)));
    int offset = 0;
    for (const auto& f : e.factors()) {
        const int d = f.degree();
        auto p = power_sums(f, 2 * d - 1);
        for (int i = 0; i < d; ++i)
            for (int j = 0; j < d; ++j)
                rows[offset + i][offset + j] = p[i + j];
        offset += d;
    }
    return SymmetricForm(std::move(rows));
}

GradedClass alpha(int i, const EtaleAlgebra& e, std::uint64_t budget)
{
    return sw_class(i, diagonalize(trace_gram(e), budget));
}

std::vector<GradedClass> alphas(const EtaleAlgebra& e, std::uint64_t budget)
{
    return sw_classes(diagonalize(trace_gram(e), budget));
}

GradedClass alpha_total(const EtaleAlgebra& e, std::uint64_t budget)
{
    return sw_total(diagonalize(trace_gram(e), budget));
}

EtaleAlgebra algebra_product(const EtaleAlgebra& a, const EtaleAlgebra& b)
{
    auto fs = a.factors();
    fs.insert(fs.end(), b.factors().begin(), b.factors().end());
    return EtaleAlgebra(std::move(fs));
}

}  // namespace cohinv
