#include "quadfrac/pell.hpp"

#include <optional>

#include "quadfrac/error.hpp"
#include "quadfrac/verifier.hpp"

namespace quadfrac {

std::pair<Integer, Integer> pell_fundamental(long d) {
    if (d <= 0) fail(ErrorKind::OutOfDomain, "pell_fundamental: d must be positive");
    Integer D(d);
    Integer a0 = isqrt(D);
    if (a0 * a0 == D) fail(ErrorKind::OutOfDomain, "pell_fundamental: d must not be a square");
    // Convergents of the continued fraction of sqrt(d) until x^2 - d y^2 = 1.
    Integer m = 0, den = 1, a = a0;
    Integer h_prev = 1, h = a0;
    Integer k_prev = 0, k = 1;
    while (h * h - D * k * k != 1) {
        m = den * a - m;
        den = (D - m * m) / den;
        a = (a0 + m) / den;
        Integer h_next = a * h + h_prev;
        Integer k_next = a * k + k_prev;
        h_prev = h; h = h_next;
        k_prev = k; k = k_next;
    }
    return {h, k};
}

namespace {

// z = a + b*omega with trace(z) = 4*N(z), from a Pell solution (x, y).
std::optional<QuadInt> two_term_candidate(const Ring& ring, const Integer& x, const Integer& y) {
    if (ring.omega_kind() == OmegaKind::Sqrt) {
        // (4a-1)^2 - d(4b)^2 = 1: need 4 | y and a sign of x with x = 3 mod 4
        if (floor_mod(y, 4) != 0) return std::nullopt;
        for (const Integer& xs : {x, Integer(-x)}) {
            if (floor_mod(xs, 4) != 3) continue;
            return QuadInt{(xs + 1) / 4, y / 4};
        }
        return std::nullopt;
    }
    // Half-integer ring: z = (U + V*sqrt(d))/2 with U = 2a+b, V = b and
    // (2U-1)^2 - d(2V)^2 = 1; exactly one sign of x yields integer a.
    if (floor_mod(y, 2) != 0) return std::nullopt;
    Integer V = y / 2;
    for (const Integer& xs : {x, Integer(-x)}) {
        if (floor_mod(xs + 1, 2) != 0) continue;
        Integer U = (xs + 1) / 2;
        if (floor_mod(U - V, 2) != 0) continue;
        return QuadInt{(U - V) / 2, V};
    }
    return std::nullopt;
}

// z with trace(z) = 3*N(z), the leading-1/1 pattern: (3a-1)^2 - d(3b)^2 = 1
// for Sqrt rings, (3U-2)^2 - d(3V)^2 = 4 for half rings (even solutions).
std::optional<QuadInt> three_term_candidate(const Ring& ring, const Integer& x, const Integer& y) {
    if (ring.omega_kind() == OmegaKind::Sqrt) {
        if (floor_mod(y, 3) != 0) return std::nullopt;
        for (const Integer& xs : {x, Integer(-x)}) {
            if (floor_mod(xs, 3) != 2) continue;
            return QuadInt{(xs + 1) / 3, y / 3};
        }
        return std::nullopt;
    }
    Integer X = 2 * x, Y = 2 * y;
    if (floor_mod(Y, 3) != 0) return std::nullopt;
    Integer V = Y / 3;
    for (const Integer& xsX : {X, Integer(-X)}) {
        if (floor_mod(xsX + 2, 3) != 0) continue;
        Integer U = (xsX + 2) / 3;
        if (floor_mod(U - V, 2) != 0) continue;
        return QuadInt{(U - V) / 2, V};
    }
    return std::nullopt;
}

}  // namespace

Decomposition pell_two_term(long d, const PellBounds& bounds) {
    if (d <= 0 || !is_squarefree(Integer(d))) {
        fail(ErrorKind::OutOfDomain, "pell_two_term: d must be a positive squarefree integer");
    }
    Ring ring = make_ring(d);
    auto [x1, y1] = pell_fundamental(d);
    Integer x = x1, y = y1;
    for (int power = 1; power <= bounds.max_power; ++power) {
        if (power > 1) {
            Integer xn = x1 * x + Integer(d) * y1 * y;
            Integer yn = x1 * y + y1 * x;
            x = xn;
            y = yn;
        }
        Integer coord = ring.omega_kind() == OmegaKind::Sqrt ? y / 4 : y / 2;
        if (coord > bounds.max_omega_coord) break;
        if (auto z = two_term_candidate(ring, x, y)) {
            Decomposition dec{{{+1, *z}, {+1, ring.conj(*z)}}, tags::kPellTwoTerm};
            if (verify(ring, QuadInt{1, 0}, dec)) return dec;
            fail(ErrorKind::InvariantViolation, "pell_two_term: candidate failed verification");
        }
        if (auto z = three_term_candidate(ring, x, y)) {
            Decomposition dec{{{+1, QuadInt{1, 0}}, {+1, *z}, {+1, ring.conj(*z)}},
                              tags::kPellThreeTerm};
            if (verify(ring, QuadInt{1, 0}, dec)) return dec;
            fail(ErrorKind::InvariantViolation, "pell_two_term: candidate failed verification");
        }
    }
    fail(ErrorKind::SearchFailure,
         "pell_two_term: no identity within " + std::to_string(bounds.max_power) +
             " Pell powers / omega-coordinate bound " + bounds.max_omega_coord.str());
}

}  // namespace quadfrac
