#include "cohinv/quadform.hpp"

#include "cohinv/error.hpp"

#include <utility>

namespace cohinv {

SymmetricForm::SymmetricForm(std::vector<std::vector<Rational>> rows) : dim_(rows.size())
{
    if (dim_ == 0)
        throw Error(ErrorKind::InvalidArgument, "empty Gram matrix");
    gram_.reserve(dim_ * dim_);
    for (auto& r : rows) {
        if (r.size() != dim_)
            throw Error(ErrorKind::InvalidArgument, "Gram matrix is not square");
        for (auto& x : r)
            gram_.push_back(std::move(x));
    }
    for (std::size_t i = 0; i < dim_; ++i)
        for (std::size_t j = i + 1; j < dim_; ++j)
            if ((*this)(i, j) != (*this)(j, i))
                throw Error(ErrorKind::InvalidArgument, "Gram matrix is not symmetric");
}

SymmetricForm SymmetricForm::identity(std::size_t n)
{
    return diagonal(std::vector<Rational>(n, Rational(1)));
}

SymmetricForm SymmetricForm::diagonal(const std::vector<Rational>& entries)
{
    std::vector<std::vector<Rational>> rows(entries.size(), std::vector<Rational>(entries.size(), Rational(0)));
    for (std::size_t i = 0; i < entries.size(); ++i)
        rows[i][i] = entries[i];
    return SymmetricForm(std::move(rows));
}

SymmetricForm SymmetricForm::congruent(const std::vector<std::vector<Rational>>& p) const
{
    if (p.size() != dim_)
        throw Error(ErrorKind::InvalidArgument, "congruence matrix has wrong size");
    // G P, then P^T (G P).
    std::vector<std::vector<Rational>> gp(dim_, std::vector<Rational>(dim_, Rational(0)));
    for (std::size_t i = 0; i < dim_; ++i)
        for (std::size_t k = 0; k < dim_; ++k)
            if ((*this)(i, k) != 0)
                for (std::size_t j = 0; j < dim_; ++j)
                    gp[i][j] += (*this)(i, k) * p[k][j];
    std::vector<std::vector<Rational>> out(dim_, std::vector<Rational>(dim_, Rational(0)));
    for (std::size_t i = 0; i < dim_; ++i)
        for (std::size_t k = 0; k < dim_; ++k)
            if (p[k][i] != 0)
                for (std::size_t j = 0; j < dim_; ++j)
                    out[i][j] += p[k][i] * gp[k][j];
    return SymmetricForm(std::move(out));
}

SymmetricForm SymmetricForm::direct_sum(const SymmetricForm& other) const
{
    std::size_t n = dim_ + other.dim_;
    std::vector<std::vector<Rational>> rows(n, std::vector<Rational>(n, Rational(0)));
    for (std::size_t i = 0; i < dim_; ++i)
        for (std::size_t j = 0; j < dim_; ++j)
            rows[i][j] = (*this)(i, j);
    for (std::size_t i = 0; i < other.dim_; ++i)
        for (std::size_t j = 0; j < other.dim_; ++j)
            rows[dim_ + i][dim_ + j] = other(i, j);
    return SymmetricForm(std::move(rows));
}

Rational SymmetricForm::determinant() const
{
    auto m = rows();
    Rational det = 1;
    for (std::size_t k = 0; k < dim_; ++k) {
        std::size_t piv = k;
        while (piv < dim_ && m[piv][k] == 0)
            ++piv;
        if (piv == dim_)
            return 0;
        if (piv != k) {
            std::swap(m[piv], m[k]);
            det = -det;
        }
        det *= m[k][k];
        for (std::size_t r = k + 1; r < dim_; ++r) {
            if (m[r][k] == 0)
                continue;
            Rational f = m[r][k] / m[k][k];
            for (std::size_t c = k; c < dim_; ++c)
                m[r][c] -= f * m[k][c];
        }
    }
    return det;
}

std::vector<std::vector<Rational>> SymmetricForm::rows() const
{
    std::vector<std::vector<Rational>> out(dim_);
    for (std::size_t i = 0; i < dim_; ++i)
        out[i].assign(gram_.begin() + i * dim_, gram_.begin() + (i + 1) * dim_);
    return out;
}

DiagonalForm diagonalize(const SymmetricForm& q, std::uint64_t budget)
{
    const std::size_t n = q.dim();
    auto m = q.rows();
    DiagonalForm out;
    out.pivots.reserve(n);

    auto swap_index = [&](std::size_t a, std::size_t b) {
        if (a == b)
            return;
        std::swap(m[a], m[b]);
        for (auto& row : m)
            std::swap(row[a], row[b]);
    };

    for (std::size_t k = 0; k < n; ++k) {
        std::size_t piv = k;
        while (piv < n && m[piv][piv] == 0)
            ++piv;

        if (piv == n) {
            // Zero diagonal: find G_ij != 0 and add row/column j to i.
            std::size_t pi = n, pj = n;
            for (std::size_t i = k; i < n && pi == n; ++i)
                for (std::size_t j = i + 1; j < n; ++j)
                    if (m[i][j] != 0) {
                        pi = i;
                        pj = j;
                        break;
                    }
            if (pi == n)
                throw Error(ErrorKind::DegenerateForm, "symmetric form has zero determinant");
            for (std::size_t c = k; c < n; ++c)
                m[pi][c] += m[pj][c];
            for (std::size_t r = k; r < n; ++r)
                m[r][pi] += m[r][pj];
            piv = pi;
        }

        swap_index(k, piv);
        const Rational pivot = m[k][k];
        for (std::size_t r = k + 1; r < n; ++r) {
            if (m[r][k] == 0)
                continue;
            Rational f = m[r][k] / pivot;
            for (std::size_t c = k + 1; c < n; ++c)
                m[r][c] -= f * m[k][c];
        }
        for (std::size_t r = k + 1; r < n; ++r)
            m[r][k] = m[k][r] = 0;
        out.pivots.push_back(pivot);
    }

    out.classes.reserve(n);
    for (const auto& p : out.pivots)
        out.classes.push_back(square_class(p, budget));
    return out;
}

namespace {

void subsets(const std::vector<SquareClass>& classes, int size, std::size_t start,
             std::vector<SquareClass>& current, std::vector<Symbol>& out)
{
    if (static_cast<int>(current.size()) == size) {
        out.emplace_back(current);
        return;
    }
    std::size_t needed = size - current.size();
    for (std::size_t i = start; i + needed <= classes.size(); ++i) {
        if (classes[i].is_trivial())
            continue;
        current.push_back(classes[i]);
        subsets(classes, size, i + 1, current, out);
        current.pop_back();
    }
}

}  // namespace

GradedClass sw_class(int i, const DiagonalForm& d)
{
    if (i < 0 || static_cast<std::size_t>(i) > d.dim())
        throw Error(ErrorKind::IndexOutOfRange,
                    "Stiefel-Whitney index " + std::to_string(i) + " outside [0, " + std::to_string(d.dim()) + "]");
    std::vector<Symbol> symbols;
    std::vector<SquareClass> current;
    subsets(d.classes, i, 0, current, symbols);
    return GradedClass::from_symbols(std::move(symbols));
}

std::vector<GradedClass> sw_classes(const DiagonalForm& d)
{
    std::vector<GradedClass> out;
    out.reserve(d.dim() + 1);
    for (std::size_t i = 0; i <= d.dim(); ++i)
        out.push_back(sw_class(static_cast<int>(i), d));
    return out;
}

GradedClass sw_total(const DiagonalForm& d)
{
    GradedClass total;
    for (auto& w : sw_classes(d))
        total += w;
    return total;
}

GradedClass ternary_w2(const SymmetricForm& q, std::uint64_t budget)
{
    if (q.dim() != 3)
        throw Error(ErrorKind::InvalidArgument, "w2 of a conic needs a ternary form");
    return sw_class(2, diagonalize(q, budget));
}

}  // namespace cohinv
