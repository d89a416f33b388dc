#pragma once

#include <compare>
#include <utility>

#include "quadfrac/integer.hpp"

namespace quadfrac {

// Element a + b*omega of a quadratic integer ring, coordinates in the {1, omega}
// basis of whatever ring the caller is working in. Addition and negation are
// basis-independent; multiplication, conjugation and norms live on Ring.
struct QuadInt {
    Integer a;
    Integer b;

    QuadInt() : a(0), b(0) {}
    QuadInt(Integer re) : a(std::move(re)), b(0) {}
    QuadInt(Integer re, Integer om) : a(std::move(re)), b(std::move(om)) {}

    bool is_zero() const { return a == 0 && b == 0; }

    friend QuadInt operator+(const QuadInt& x, const QuadInt& y) { return {x.a + y.a, x.b + y.b}; }
    friend QuadInt operator-(const QuadInt& x, const QuadInt& y) { return {x.a - y.a, x.b - y.b}; }
    friend QuadInt operator-(const QuadInt& x) { return {-x.a, -x.b}; }

    friend bool operator==(const QuadInt& x, const QuadInt& y) { return x.a == y.a && x.b == y.b; }
    friend bool operator!=(const QuadInt& x, const QuadInt& y) { return !(x == y); }

    // Lexicographic on (a, b); this is the order behind canonical associates.
    friend bool operator<(const QuadInt& x, const QuadInt& y) {
        if (x.a != y.a) return x.a < y.a;
        return x.b < y.b;
    }
};

}  // namespace quadfrac
