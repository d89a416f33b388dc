#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "quadfrac/error.hpp"
#include "quadfrac/quad_int.hpp"

namespace quadfrac {

enum class OmegaKind {
    Sqrt,         // omega = sqrt(d), for d = 2, 3 (mod 4)
    HalfPlusSqrt  // omega = (1 + sqrt(d)) / 2, for d = 1 (mod 4)
};

struct DivModResult {
    QuadInt quotient;
    QuadInt remainder;
};

struct IntRemResult {
    QuadInt quotient;
    Integer remainder;  // rational integer, |r| <= (N(n)-1)/2
};

// The ring of integers D[d] of Q(sqrt(d)).
class Ring {
public:
    explicit Ring(long d);

    long d() const { return d_; }
    OmegaKind omega_kind() const { return omega_kind_; }

    // omega^2 = p + q*omega
    const Integer& omega_sq_p() const { return omega_sq_p_; }
    const Integer& omega_sq_q() const { return omega_sq_q_; }

    // N(a + b*omega) = a^2 + t*a*b + u*b^2
    const Integer& norm_t() const { return norm_t_; }
    const Integer& norm_u() const { return norm_u_; }

    bool norm_euclidean() const { return norm_euclidean_; }

    // Finite unit group, closed under negation; empty for positive d
    // (infinite unit group marker).
    const std::vector<QuadInt>& units() const { return units_; }

    // Prime divisors of 2; empty with two_is_prime() set when 2 is inert.
    // Populated only for the five negative norm-Euclidean rings.
    const std::vector<QuadInt>& two_divisors() const { return two_divisors_; }
    bool two_is_prime() const { return two_is_prime_; }

    // Exceptional set E_d, defined only for d in {-1,-2,-3,-7,-11}.
    bool has_exceptional_set() const { return exceptional_norm_bound_ != 0; }
    const Integer& exceptional_norm_bound() const { return exceptional_norm_bound_; }
    bool is_exceptional(const QuadInt& x) const;
    // Materialized E_d, sorted by (norm, a, b); includes 0.
    std::vector<QuadInt> exceptional_set() const;

    // --- arithmetic ---
    QuadInt mul(const QuadInt& x, const QuadInt& y) const;
    QuadInt conj(const QuadInt& x) const;
    Integer norm(const QuadInt& x) const;
    Integer trace(const QuadInt& x) const;

    // x * conj(y) / N(y) when it lands in the ring.
    std::optional<QuadInt> div_exact(const QuadInt& x, const QuadInt& y) const;
    bool divides(const QuadInt& y, const QuadInt& x) const { return div_exact(x, y).has_value(); }

    // n = 4q + r, both coordinates of r in {-1, 0, 1, 2}; one r per class of
    // the 16-element quotient mod 4.
    DivModResult div_by_four(const QuadInt& n) const;

    // x = nq + r with |N(r)| < |N(n)|; q is the nearest-lattice rounding of
    // x/n, ties toward -inf per coordinate.
    DivModResult euclid_divmod(const QuadInt& x, const QuadInt& n) const;

    // x = nq + r with r a rational integer, |r| <= (N(n)-1)/2. Requires N(n)
    // odd, N(n) != 1 and gcd over the omega-coordinate of n and N(n).
    IntRemResult int_rem_divmod(const QuadInt& x, const QuadInt& n) const;

    std::vector<QuadInt> associates(const QuadInt& x) const;
    // Lexicographically least associate and the unit achieving it.
    std::pair<QuadInt, QuadInt> canonical_associate(const QuadInt& x) const;

private:
    long d_;
    OmegaKind omega_kind_;
    Integer omega_sq_p_, omega_sq_q_;
    Integer norm_t_, norm_u_;
    bool norm_euclidean_ = false;
    bool two_is_prime_ = false;
    std::vector<QuadInt> units_;
    std::vector<QuadInt> two_divisors_;
    Integer exceptional_norm_bound_ = 0;
    std::vector<QuadInt> exceptional_exclusions_;
};

Ring make_ring(long d);

// Element text syntax: `a`, `a+b*w`, `a-b*w`, `b*w`, `w` with optional spaces.
QuadInt parse_element(const std::string& text);
std::string format_element(const QuadInt& x);

}  // namespace quadfrac
