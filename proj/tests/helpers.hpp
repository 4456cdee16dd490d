#pragma once

#include "cohinv/error.hpp"
#include "cohinv/rational.hpp"
#include "doctest.h"

#define CHECK_THROWS_KIND(expr, expected_kind)                                  \
    do {                                                                        \
        bool thrown_ = false;                                                   \
        try {                                                                   \
            (void)(expr);                                                       \
        } catch (const cohinv::Error& e_) {                                     \
            thrown_ = true;                                                     \
            CHECK_MESSAGE(e_.kind() == (expected_kind), cohinv::to_string(e_.kind())); \
        }                                                                       \
        CHECK_MESSAGE(thrown_, "expected " #expected_kind);                     \
    } while (0)

inline cohinv::Rational q(long n, long d = 1)
{
    cohinv::Rational r(n, d);
    r.canonicalize();
    return r;
}
