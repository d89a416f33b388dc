#pragma once

#include "quadfrac/error.hpp"
#include "quadfrac/ring.hpp"

namespace quadfrac {

// Exact fraction of two ring elements; the carrier for verification and
// residual arithmetic in Q(sqrt(d)). Never reduced: equality is
// cross-multiplication in the ring, which is exact in an integral domain.
struct QuadRat {
    QuadInt num;
    QuadInt den;

    QuadRat(QuadInt n, QuadInt d) : num(std::move(n)), den(std::move(d)) {
        if (den.is_zero()) fail(ErrorKind::DivisionByZero, "QuadRat with zero denominator");
    }

    bool is_zero() const { return num.is_zero(); }
};

inline bool rat_equal(const Ring& ring, const QuadRat& x, const QuadRat& y) {
    return ring.mul(x.num, y.den) == ring.mul(y.num, x.den);
}

inline QuadRat rat_sub(const Ring& ring, const QuadRat& x, const QuadRat& y) {
    return QuadRat{ring.mul(x.num, y.den) - ring.mul(y.num, x.den), ring.mul(x.den, y.den)};
}

inline QuadRat rat_add(const Ring& ring, const QuadRat& x, const QuadRat& y) {
    return QuadRat{ring.mul(x.num, y.den) + ring.mul(y.num, x.den), ring.mul(x.den, y.den)};
}

}  // namespace quadfrac
