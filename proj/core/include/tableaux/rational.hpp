#ifndef TABLEAUX_RATIONAL_HPP
#define TABLEAUX_RATIONAL_HPP

#include <boost/multiprecision/cpp_int.hpp>

namespace tableaux {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// x^e for integer e (negative allowed), exact for Rational, loop-based for
/// double so both modes evaluate the same expression tree.
template <class T>
T ipow(const T& x, long e) {
    if (e < 0) return T(1) / ipow(x, -e);
    T r(1), b(x);
    while (e > 0) {
        if (e & 1) r *= b;
        b *= b;
        e >>= 1;
    }
    return r;
}

inline BigInt factorial_big(long n) {
    BigInt r = 1;
    for (long i = 2; i <= n; ++i) r *= i;
    return r;
}

} // namespace tableaux

#endif
