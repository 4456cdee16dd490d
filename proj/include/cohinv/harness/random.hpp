#pragma once

#include "cohinv/etale.hpp"
#include "cohinv/hyperell.hpp"
#include "cohinv/quadform.hpp"

#include <cstdint>
#include <vector>

namespace cohinv::harness {

/// SplitMix64. Used instead of the <random> distributions so that
/// generated corpora are identical across standard libraries.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next();
    /// Uniform integer in [lo, hi].
    long uniform(long lo, long hi);
    /// Uniform nonzero integer in [-bound, bound].
    long nonzero(long bound);
    /// n / d with |n| <= num_bound, 1 <= d <= den_bound, n != 0.
    Rational rational(long num_bound, long den_bound);

private:
    std::uint64_t state_;
};

/// Mixes a base seed with a stream tag and index into an independent seed.
std::uint64_t derive_seed(std::uint64_t base, std::uint64_t tag, std::uint64_t index);

/// Deterministic smooth binary form of genus g with integer coefficients
/// in [-height, height]. Throws GenerationFailure after 1000 rejected
/// attempts and InvalidArgument for odd or small g.
BinaryForm random_form(std::uint64_t seed, int g, int height);

/// Same, restricted to x_0 = 0 (the curve has a rational Weierstrass point
/// at infinity).
BinaryForm random_form_at_infinity(std::uint64_t seed, int g, int height);

/// Random squarefree polynomial of the given degree with integer
/// coefficients in [-height, height].
Polynomial random_squarefree(Rng& rng, int degree, int height);

/// Random etale algebra of exactly the given total degree, split into one
/// to three factors.
EtaleAlgebra random_etale(Rng& rng, int total_degree, int height);

/// Random invertible 2x2 matrix with small rational entries.
Matrix2 random_matrix2(Rng& rng);

/// Random invertible n x n rational matrix with small entries.
std::vector<std::vector<Rational>> random_invertible(Rng& rng, std::size_t n);

/// Random nondegenerate symmetric form of dimension n; with probability
/// about one half its diagonal is zero.
SymmetricForm random_symmetric(Rng& rng, std::size_t n, int height);

}  // namespace cohinv::harness
