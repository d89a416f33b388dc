#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace quadfrac {

// Coordinates are unbounded: the recipe constants composed with quadratic
// growth overflow 64-bit ranges on moderate inputs.
using Integer = boost::multiprecision::cpp_int;

inline Integer floor_div(const Integer& num, const Integer& den) {
    Integer q = num / den;
    if ((num % den) != 0 && ((num < 0) != (den < 0))) --q;
    return q;
}

inline Integer floor_mod(const Integer& num, const Integer& den) {
    return num - floor_div(num, den) * den;
}

// Nearest integer to num/den, halves rounded toward -inf.
inline Integer round_half_down(const Integer& num, const Integer& den) {
    Integer n = num, d = den;
    if (d < 0) { n = -n; d = -d; }
    return floor_div(2 * n + d - 1, 2 * d);
}

// g = gcd(a,b) >= 0 with g = s*a + t*b.
inline Integer ext_gcd(const Integer& a, const Integer& b, Integer& s, Integer& t) {
    Integer old_r = a, r = b;
    Integer old_s = 1, s_ = 0;
    Integer old_t = 0, t_ = 1;
    while (r != 0) {
        Integer q = old_r / r;
        Integer tmp = old_r - q * r; old_r = r; r = tmp;
        tmp = old_s - q * s_; old_s = s_; s_ = tmp;
        tmp = old_t - q * t_; old_t = t_; t_ = tmp;
    }
    if (old_r < 0) { old_r = -old_r; old_s = -old_s; old_t = -old_t; }
    s = old_s;
    t = old_t;
    return old_r;
}

inline Integer isqrt(const Integer& n) {
    return boost::multiprecision::sqrt(n);
}

inline bool is_squarefree(Integer n) {
    if (n < 0) n = -n;
    if (n == 0) return false;
    for (Integer p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            n /= p;
            if (n % p == 0) return false;
        }
    }
    return true;
}

}  // namespace quadfrac
