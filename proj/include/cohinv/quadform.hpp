#pragma once

#include "cohinv/graded_class.hpp"
#include "cohinv/rational.hpp"

#include <cstddef>
#include <vector>

namespace cohinv {

/// Symmetric Gram matrix over Q, row-major.
class SymmetricForm {
public:
    /// Throws InvalidArgument when the matrix is empty, not square or not
    /// symmetric.
    explicit SymmetricForm(std::vector<std::vector<Rational>> rows);

    static SymmetricForm identity(std::size_t n);
    static SymmetricForm diagonal(const std::vector<Rational>& entries);

    std::size_t dim() const noexcept { return dim_; }
    const Rational& operator()(std::size_t i, std::size_t j) const { return gram_[i * dim_ + j]; }

    /// P^T G P; P must be dim x dim.
    SymmetricForm congruent(const std::vector<std::vector<Rational>>& p) const;

    /// Orthogonal sum (block-diagonal Gram matrix).
    SymmetricForm direct_sum(const SymmetricForm& other) const;

    Rational determinant() const;

    std::vector<std::vector<Rational>> rows() const;

private:
    std::size_t dim_;
    std::vector<Rational> gram_;
};

/// <lambda_1, ..., lambda_n>: the exact pivots of a diagonalization and
/// their square classes.
struct DiagonalForm {
    std::vector<Rational> pivots;
    std::vector<SquareClass> classes;

    std::size_t dim() const noexcept { return pivots.size(); }
};

/// Symmetric Gaussian elimination. At each step the first nonzero diagonal
/// entry of the working block is moved to the front and eliminated; when
/// the block has zero diagonal, row and column j are first added to row
/// and column i for the first off-diagonal G_ij != 0. Throws
/// DegenerateForm when det = 0.
DiagonalForm diagonalize(const SymmetricForm& q, std::uint64_t budget = default_factor_budget());

/// e_i({lambda_1}, ..., {lambda_n}): the sum over all i-subsets of the
/// corresponding symbols. Throws IndexOutOfRange unless 0 <= i <= n.
GradedClass sw_class(int i, const DiagonalForm& d);

/// All Stiefel-Whitney classes w_0, ..., w_n, indexed by degree.
std::vector<GradedClass> sw_classes(const DiagonalForm& d);

/// sum_i w_i
GradedClass sw_total(const DiagonalForm& d);

/// w_2 of a ternary form (the conic it defines). Throws InvalidArgument
/// unless dim = 3.
GradedClass ternary_w2(const SymmetricForm& q, std::uint64_t budget = default_factor_budget());

}  // namespace cohinv
