#pragma once

#include <vector>

#include "quadfrac/decomposition.hpp"
#include "quadfrac/ring.hpp"

namespace quadfrac {

struct ScanReport {
    long d = 0;
    Integer norm_bound = 0;
    Integer den_norm_bound = 0;  // conjecture scans only
    long attempted = 0;
    long decomposed = 0;
    std::vector<QuadInt> failures;
    std::vector<QuadInt> exceptional_hits;
};

struct BruteForceOptions {
    int term_count = 3;           // exact number of unit fractions
    Integer den_norm_bound = 100;
    bool cone_only = false;       // d = -1 only: cone denominators, + signs
    int max_results = 16;
};

// All lattice points with 1 <= N <= bound, sorted by (norm, a, b).
std::vector<QuadInt> lattice_points(const Ring& ring, const Integer& norm_bound);

// Exhaustive search for sum-of-unit-fraction decompositions of 4/n with
// denominators of norm <= den_norm_bound. Denominator tuples are enumerated
// in nondecreasing (norm, a, b) order with exact partial-sum pruning; negative
// signs are carried by negated denominators. Deterministic.
std::vector<Decomposition> brute_force(const Ring& ring, const QuadInt& n,
                                       const BruteForceOptions& opts);

// Runs decompose + verify on every n with 1 <= N(n) <= norm_bound.
ScanReport scan_theorem(const Ring& ring, const Integer& norm_bound, int jobs = 1);

// Cone-restricted existence scan over Z[i]: every n with nonnegative
// coordinates, n not in {0, 1, w, 1+w}, 1 <= N(n) <= norm_bound. A failure is
// an open instance within den_norm_bound, not a refutation.
ScanReport scan_conjecture(const Integer& norm_bound, const Integer& den_norm_bound, int jobs = 1);

}  // namespace quadfrac
