#pragma once

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/cpp_int.hpp>

namespace flagforge {

// Exact integer used for every face/clique count.  Counts grow
// combinatorially; silent overflow would corrupt constructions.
using Int = boost::multiprecision::cpp_int;

// High-precision real for bound ceilings and limit constants
// (100 decimal digits; callers display fewer).
using Real = boost::multiprecision::cpp_bin_float_100;

inline Real to_real(const Int& v) { return Real(v); }

inline Int pow_int(Int base, long long exp) {
    Int r = 1;
    while (exp > 0) {
        if (exp & 1) r *= base;
        base *= base;
        exp >>= 1;
    }
    return r;
}

}  // namespace flagforge
