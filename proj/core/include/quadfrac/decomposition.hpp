#pragma once

#include <string>
#include <vector>

#include "quadfrac/quad_int.hpp"

namespace quadfrac {

struct UnitFraction {
    int sign;     // +1 or -1
    QuadInt den;  // nonzero

    friend bool operator==(const UnitFraction& x, const UnitFraction& y) {
        return x.sign == y.sign && x.den == y.den;
    }
};

// An ordered sequence of 1-3 signed unit fractions summing to 4/n, plus the
// provenance of the recipe that produced it.
struct Decomposition {
    std::vector<UnitFraction> terms;
    std::string recipe_tag;
};

// Stable recipe_tag vocabulary.
namespace tags {
inline const char* kEq2Integer = "eq2-integer";
inline const char* kProp5MinusOne = "prop5-minus-one";
inline const char* kProp5ROne = "prop5-r1";
inline const char* kSpecialTable = "special-table";
inline const char* kEvenScaled = "even-scaled";
inline const char* kFactorScaled = "factor-scaled";
inline const char* kPellTwoTerm = "pell-two-term";
inline const char* kPellThreeTerm = "pell-three-term";
inline const char* kBruteForce = "brute-force";
// s-recipes carry "s-recipe:<d>:<divisor>:<r>"; resplits carry "resplit:<d>".
}  // namespace tags

}  // namespace quadfrac
