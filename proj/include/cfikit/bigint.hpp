#pragma once
#include <boost/multiprecision/cpp_int.hpp>

namespace cfikit {

using BigInt = boost::multiprecision::cpp_int;

inline bool is_power_of_two(const BigInt& v) {
    if (v <= 0) return false;
    BigInt x = v;
    while ((x & 1) == 0) x >>= 1;
    return x == 1;
}

// Largest e with 2^e dividing v; v must be nonzero.
inline unsigned two_adic_valuation(const BigInt& v) {
    BigInt x = v < 0 ? BigInt(-v) : v;
    unsigned e = 0;
    while ((x & 1) == 0) { x >>= 1; ++e; }
    return e;
}

}  // namespace cfikit
