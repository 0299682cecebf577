#include "fintop/arith.hpp"

#include <string>

namespace fintop {

Count checked_pow(Count base, unsigned exponent) {
    Count r = 1;
    for (unsigned i = 0; i < exponent; ++i) r = checked_mul(r, base);
    return r;
}

Count factorial(unsigned n) {
    Count r = 1;
    for (unsigned i = 2; i <= n; ++i) r = checked_mul(r, i);
    return r;
}

Count binomial(Count n, Count k) {
    if (k > n) return 0;
    if (k > n - k) k = n - k;
    // r stays C(n - k + i, i) after step i, so every division is exact.
    Count r = 1;
    for (Count i = 1; i <= k; ++i) {
        Count numer = n - k + i;
        unsigned __int128 wide = static_cast<unsigned __int128>(r) * numer / i;
        if (wide > UINT64_MAX) throw Error(Errc::overflow, "binomial exceeds 64 bits");
        r = static_cast<Count>(wide);
    }
    return r;
}

Count multiset_coefficient(Count types, Count k) {
    if (k == 0) return 1;
    if (types == 0) return 0;
    return binomial(checked_add(types, k) - 1, k);
}

Count exact_divide(Count numerator, Count denominator, const char* what) {
    if (denominator == 0 || numerator % denominator != 0) {
        throw Error(Errc::internal_error, std::string(what) + ": " + std::to_string(numerator) +
                                              " is not divisible by " + std::to_string(denominator));
    }
    return numerator / denominator;
}

}  // namespace fintop
