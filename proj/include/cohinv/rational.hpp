#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace cohinv {

/// Exact rational, always kept in lowest terms with positive denominator.
using Rational = mpq_class;
using Integer = mpz_class;

/// Parses "n", "-n" or "n/d". Throws Error(InvalidArgument) on malformed
/// input or a zero denominator.
Rational parse_rational(std::string_view text);

/// "n" when the denominator is one, else "n/d".
std::string to_string(const Rational& q);
std::string to_string(const Integer& z);

}  // namespace cohinv
