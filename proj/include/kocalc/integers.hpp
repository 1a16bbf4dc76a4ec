#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>

namespace kocalc {

// Exact arbitrary-precision integer. All homological computations in this
// project are integer- or GF(2)-exact; there is no floating point anywhere.
using Int = boost::multiprecision::cpp_int;

inline Int abs_int(const Int& a) { return a < 0 ? Int(-a) : a; }

// Quotient with symmetric remainder: a = q*b + r, |r| <= |b|/2.
// Keeps entries small during elimination.
inline Int sym_quot(const Int& a, const Int& b) {
    Int q = a / b;
    Int r = a - q * b;
    Int b2 = abs_int(b);
    if (2 * abs_int(r) > b2) {
        if ((r > 0) == (b > 0))
            q += 1;
        else
            q -= 1;
    }
    return q;
}

inline std::string to_string(const Int& a) { return a.str(); }

}  // namespace kocalc
