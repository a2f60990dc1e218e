#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdio>
#include <string>

namespace hullwalk {

// Exact arbitrary-precision integers and rationals. Every probability and
// expectation in this library is a BigRational; doubles appear only at the
// reporting boundary and in the asymptotic formula.
using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

inline BigInt factorial(unsigned n) {
    BigInt f = 1;
    for (unsigned i = 2; i <= n; ++i) f *= i;
    return f;
}

inline BigInt binomial(unsigned n, unsigned k) {
    if (k > n) return 0;
    if (k > n - k) k = n - k;
    BigInt num = 1, den = 1;
    for (unsigned i = 0; i < k; ++i) {
        num *= n - i;
        den *= i + 1;
    }
    return num / den;
}

// (2n-1)!! = 1*3*...*(2n-1); empty product for n = 0.
inline BigInt odd_double_factorial(unsigned n) {
    BigInt f = 1;
    for (unsigned i = 1; i <= n; ++i) f *= 2 * i - 1;
    return f;
}

inline double to_double(const BigRational& r) { return r.convert_to<double>(); }

// "num/den" (or just "num" when the denominator is 1).
inline std::string rational_string(const BigRational& r) {
    std::string s = numerator(r).str();
    if (denominator(r) != 1) s += "/" + denominator(r).str();
    return s;
}

// 15-significant-digit decimal rendering.
inline std::string decimal_string(const BigRational& r) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.15g", to_double(r));
    return buf;
}

}  // namespace hullwalk
