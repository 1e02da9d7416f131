#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace dnacodes {

// Counting results routinely exceed 64 bits (q^n for modest n already does),
// and the probability work in the bounds module must stay exact, so both
// integers and rationals are arbitrary precision.
using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

inline BigInt ipow(BigInt base, unsigned exp) {
    BigInt r = 1;
    while (exp != 0) {
        if (exp & 1u) r *= base;
        base *= base;
        exp >>= 1u;
    }
    return r;
}

inline BigInt ipow(int base, unsigned exp) { return ipow(BigInt(base), exp); }

// C(n, k), zero when k > n.
inline BigInt binomial(unsigned n, unsigned k) {
    if (k > n) return 0;
    if (k > n - k) k = n - k;
    BigInt r = 1;
    for (unsigned i = 1; i <= k; ++i) {
        r *= n - k + i;
        r /= i;
    }
    return r;
}

inline BigInt bigrat_floor(const BigRat& x) {
    BigInt num = boost::multiprecision::numerator(x);
    const BigInt den = boost::multiprecision::denominator(x);  // positive
    BigInt q = num / den;
    if (num < 0 && q * den != num) --q;
    return q;
}

inline double to_double(const BigRat& x) { return x.convert_to<double>(); }
inline double to_double(const BigInt& x) { return x.convert_to<double>(); }

}  // namespace dnacodes
