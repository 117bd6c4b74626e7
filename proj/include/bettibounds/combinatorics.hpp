#ifndef BETTIBOUNDS_COMBINATORICS_HPP
#define BETTIBOUNDS_COMBINATORICS_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>

namespace bb {

using Bint = boost::multiprecision::cpp_int;

/// Exact binomial coefficient; 0 for k < 0 or k > n (n >= 0 assumed).
inline Bint binom(long long n, long long k) {
    if (k < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    Bint r = 1;
    for (long long i = 1; i <= k; ++i) {
        r *= n - k + i;
        r /= i;
    }
    return r;
}

inline int popcount(std::uint32_t m) { return __builtin_popcount(m); }

/// Next k-subset mask in colex order (Gosper's hack); call with the smallest
/// k-subset mask and iterate while the result stays below (1 << n).
inline std::uint32_t next_subset_same_size(std::uint32_t v) {
    std::uint32_t t = v | (v - 1);
    return (t + 1) | (((~t & -(~t)) - 1) >> (__builtin_ctz(v) + 1));
}

} // namespace bb

#endif
