#pragma once

#include <utility>

#include "quadfrac/decomposition.hpp"
#include "quadfrac/ring.hpp"

namespace quadfrac {

struct PellBounds {
    int max_power = 50;                 // powers of the fundamental solution
    Integer max_omega_coord = 1000000;  // bound on the omega-coordinate of z
};

// Fundamental solution (x, y), x,y > 0 minimal, of x^2 - d*y^2 = 1, via the
// continued fraction expansion of sqrt(d).
std::pair<Integer, Integer> pell_fundamental(long d);

// Two-term identity 4 = 1/z + 1/conj(z) with z in D[d], d > 0 squarefree,
// searched over ascending powers of the fundamental Pell solution; at each
// power the two-term trace condition is tried before the 4 = 1/1 + 1/z +
// 1/conj(z) three-term one. Terms come out as [z, conj(z)] or
// [1, z, conj(z)].
Decomposition pell_two_term(long d, const PellBounds& bounds = {});

}  // namespace quadfrac
