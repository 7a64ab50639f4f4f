#pragma once

// Counts overflow 64 bits well inside the ranges we tabulate (the t = 4
// column passes 10^22 by n = 30), so all counting APIs traffic in an
// arbitrary-precision integer type.

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>

namespace stacksort {

using BigInt = boost::multiprecision::cpp_int;

inline std::string to_decimal(const BigInt& x) { return x.str(); }

inline BigInt factorial(int n) {
    if (n < 0) throw std::invalid_argument("factorial: n must be >= 0");
    BigInt r = 1;
    for (int k = 2; k <= n; ++k) r *= k;
    return r;
}

// Multiplicative form; every intermediate value is an exact binomial.
inline BigInt binomial(int n, int k) {
    if (n < 0 || k < 0) throw std::invalid_argument("binomial: arguments must be >= 0");
    if (k > n) return 0;
    k = std::min(k, n - k);
    BigInt r = 1;
    for (int i = 1; i <= k; ++i) {
        r *= n - k + i;
        r /= i;
    }
    return r;
}

} // namespace stacksort
