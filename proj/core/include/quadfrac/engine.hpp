#pragma once

#include <optional>

#include "quadfrac/decomposition.hpp"
#include "quadfrac/ring.hpp"

namespace quadfrac {

// Unit-and-conjugation symmetry: applying the inverse to a decomposition of
// the transformed input yields a decomposition of the original.
struct SymmetryTransform {
    QuadInt unit;
    bool conjugate;
};

struct SymmetryReduction {
    SymmetryTransform transform;
    QuadInt reduced;  // unit * conj^c(n), landing in a handled remainder class
};

// Integer fallback for 4/n over Z, |n| >= 2. The n = 4k+3 case uses the
// denominator (k+1)(4k+3); the (k+1)(4k+1) variant fails the exact check.
Decomposition decompose_integer(const Integer& n);

// 4/(4a-1) = 1/a + 1/(a(4a-1)), a != 0.
Decomposition recipe_minus_one(const Ring& ring, const QuadInt& a);

// 4/(4(Nb+1)-N) = 1/(Nb+1) + 1/((4(Nb+1)-N)b) - 1/((4(Nb+1)-N)(Nb+1)b),
// b != 0, Nb+1 != 0.
Decomposition recipe_r_one(const Ring& ring, const QuadInt& divisor, const QuadInt& b);

// Supported s-function branch for (ring, divisor, r): builds q = divisor*cd + r,
// p = 4q - divisor and the branch's s by its defining exact division.
Decomposition recipe_s(const Ring& ring, const QuadInt& divisor, long r, const QuadInt& cd);

// First transform (units in ring order, conjugation last) mapping div4 of the
// result into the ring's handled remainder classes; nullopt is the even-case
// signal (n divisible by a prime divisor of 2).
std::optional<SymmetryReduction> reduce_by_symmetry(const Ring& ring, const QuadInt& n);

struct TableEntry {
    QuadInt key;
    std::vector<UnitFraction> terms;
};

// Fixed per-ring special decompositions, keyed by canonical associate
// (lookup also matches conjugates of keys).
const std::vector<TableEntry>& special_table(const Ring& ring);
std::optional<Decomposition> special_table_lookup(const Ring& ring, const QuadInt& n);

// Constructive decomposition of 4/n, d in {-1,-2,-3,-7,-11}, n not in E_d.
// Every returned decomposition is verified exactly before being handed back.
Decomposition decompose(const Ring& ring, const QuadInt& n);

// 1/x = 1/(2x) + 1/(2x) padding until exactly three terms.
Decomposition pad_to_three(const Ring& ring, const Decomposition& dec);

}  // namespace quadfrac
