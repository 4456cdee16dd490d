#pragma once

#include "cohinv/graded_class.hpp"
#include "cohinv/hilbert.hpp"

#include <string>
#include <vector>

namespace cohinv {

/// Decides whether a class of H^*(Q, Z/2) vanishes.
///
/// Degree by degree:
///   d = 0   parity of the unit-symbol count;
///   d = 1   product of all entries is a square;
///   d = 2   every local invariant (product of Hilbert symbols) is +1 at
///           the real place, at 2, and at each odd prime dividing an entry;
///   d >= 3  H^d(Q) -> H^d(R) is an isomorphism, so only the number of
///           all-negative symbols mod 2 matters.
bool is_zero(const GradedClass& c);

/// is_zero(a + b).
bool equal(const GradedClass& a, const GradedClass& b);

/// Whether the homogeneous component of degree d vanishes.
bool is_zero_in_degree(const GradedClass& c, int d);

/// Places where the degree-two component has local invariant -1,
/// finite primes ascending then Real. Always of even cardinality.
std::vector<Place> ramified_places(const GradedClass& c);

/// Image of the degree-d component in H^d(R) = Z/2.
bool real_bit(const GradedClass& c, int d);

/// Canonical normal-form description, one line per nonzero degree,
/// ascending:
///   deg0: 1
///   deg1: <squarefree integer>
///   deg2: ramified at {p1, p2, ..., Real}
///   degN: {-1,-1,...,-1}        (N >= 3, N copies of -1)
/// The zero class renders as "0".
std::string render(const GradedClass& c);

/// Single-line form of a formal sum, e.g. "{2,3} + {-1}"; "0" when empty.
std::string to_string(const GradedClass& c);

}  // namespace cohinv
