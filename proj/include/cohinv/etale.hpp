#pragma once

#include "cohinv/graded_class.hpp"
#include "cohinv/polynomial.hpp"
#include "cohinv/quadform.hpp"

#include <vector>

namespace cohinv {

/// Q[x]/(f_1) x ... x Q[x]/(f_k) with each f_j monic and squarefree.
/// Reducible factors are allowed; the algebra only depends on the ideal.
class EtaleAlgebra {
public:
    /// Monic-normalizes each factor. Throws NotSquarefree if a factor is
    /// constant or has a repeated root, InvalidArgument if empty.
    explicit EtaleAlgebra(std::vector<Polynomial> factors);

    /// Q^n, the split algebra.
    static EtaleAlgebra split(int n);

    const std::vector<Polynomial>& factors() const noexcept { return factors_; }
    int total_degree() const noexcept { return degree_; }

private:
    std::vector<Polynomial> factors_;
    int degree_ = 0;
};

bool is_etale(const std::vector<Polynomial>& factors);

/// Power sums p_0, ..., p_{count-1} of the roots of a monic polynomial,
/// via Newton's identities.
std::vector<Rational> power_sums(const Polynomial& monic, int count);

/// Block-diagonal Gram matrix of x -> Tr(x^2); the block of a factor of
/// degree d is the Hankel matrix (p_{i+j})_{0 <= i,j < d}.
SymmetricForm trace_gram(const EtaleAlgebra& e);

/// alpha_i: w_i of the trace form. Throws IndexOutOfRange unless
/// 0 <= i <= total_degree.
GradedClass alpha(int i, const EtaleAlgebra& e, std::uint64_t budget = default_factor_budget());

/// alpha_0, ..., alpha_n from a single diagonalization.
std::vector<GradedClass> alphas(const EtaleAlgebra& e, std::uint64_t budget = default_factor_budget());

GradedClass alpha_total(const EtaleAlgebra& e, std::uint64_t budget = default_factor_budget());

/// E x E'
EtaleAlgebra algebra_product(const EtaleAlgebra& a, const EtaleAlgebra& b);

}  // namespace cohinv
