#pragma once

#include "quadfrac/decomposition.hpp"
#include "quadfrac/ring.hpp"

namespace quadfrac {

// Exact check that the terms sum to 4/n, by clearing denominators:
//   4 * prod(den_i) == n * sum_i sign_i * prod_{j != i} den_j
// No rational rounding anywhere.
bool verify(const Ring& ring, const QuadInt& n, const Decomposition& dec);

// Conjecture-1 cone over Z[i]: both coordinates >= 0 or both <= 0.
bool in_cone(const QuadInt& x);

struct ConeReport {
    QuadInt n;
    bool in_domain;  // coords of n nonnegative and n not in {0, 1, w, 1+w}
    bool terms_ok;   // every denominator lies in the cone
    bool sum_ok;     // verify() result
    bool satisfied() const { return in_domain && terms_ok && sum_ok; }
};

ConeReport check_conjecture(const Ring& ring, const QuadInt& n, const Decomposition& dec);

}  // namespace quadfrac
