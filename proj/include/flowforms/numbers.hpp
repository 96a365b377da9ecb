// Exact integer/rational scalars used throughout the library.
// All counting and polynomial arithmetic is arbitrary precision; the
// library contains no floating point.

#pragma once

#include <gmpxx.h>
#include <string>

namespace flowforms {

using Int = mpz_class;
using Rat = mpq_class;

inline Int factorial(long n) {
    Int r = 1;
    for (long k = 2; k <= n; ++k) r *= k;
    return r;
}

inline Int binomial(long n, long k) {
    if (k < 0 || k > n) return 0;
    Int r = 1;
    for (long i = 0; i < k; ++i) {
        r *= (n - i);
        r /= (i + 1);
    }
    return r;
}

inline std::string to_string(const Int& v) { return v.get_str(); }

inline std::string to_string(const Rat& v) {
    Rat c = v;
    c.canonicalize();
    return c.get_str();
}

} // namespace flowforms
