#pragma once

#include <cstdint>

#include "fintop/error.hpp"

namespace fintop {

// Counts are exact; any operation that would leave the 64-bit range throws.
using Count = std::uint64_t;

inline Count checked_add(Count a, Count b) {
    Count r;
    if (__builtin_add_overflow(a, b, &r)) throw Error(Errc::overflow, "addition exceeds 64 bits");
    return r;
}

inline Count checked_mul(Count a, Count b) {
    Count r;
    if (__builtin_mul_overflow(a, b, &r)) throw Error(Errc::overflow, "product exceeds 64 bits");
    return r;
}

Count checked_pow(Count base, unsigned exponent);
Count factorial(unsigned n);

/// Binomial coefficient C(n, k); zero when k > n.
Count binomial(Count n, Count k);

/// Number of size-k multisets drawn from `types` kinds: C(types + k - 1, k).
Count multiset_coefficient(Count types, Count k);

/// Divides `numerator` by `denominator`, throwing internal_error when the
/// quotient is not an integer.
Count exact_divide(Count numerator, Count denominator, const char* what);

}  // namespace fintop
