#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "quadfrac/oracle.hpp"
#include "quadfrac/rational.hpp"
#include "quadfrac/ring.hpp"

using namespace quadfrac;

namespace {
QuadInt E(long a, long b) { return QuadInt{a, b}; }
}  // namespace

TEST_CASE("make_ring shapes") {
    Ring g = make_ring(-1);
    CHECK(g.omega_kind() == OmegaKind::Sqrt);
    CHECK(g.omega_sq_p() == -1);
    CHECK(g.omega_sq_q() == 0);
    CHECK(g.norm_t() == 0);
    CHECK(g.norm_u() == 1);
    CHECK(g.units().size() == 4);
    CHECK(g.two_divisors() == std::vector<QuadInt>{E(1, 1)});

    Ring e = make_ring(-11);
    CHECK(e.omega_kind() == OmegaKind::HalfPlusSqrt);
    CHECK(e.omega_sq_p() == -3);
    CHECK(e.omega_sq_q() == 1);
    CHECK(e.norm_t() == 1);
    CHECK(e.norm_u() == 3);
    CHECK(e.two_is_prime());

    // d = 2 mod 4 uses Z[sqrt(d)]
    Ring s6 = make_ring(6);
    CHECK(s6.omega_kind() == OmegaKind::Sqrt);
    CHECK(s6.norm_u() == -6);
    CHECK(s6.norm_euclidean());
    CHECK(s6.units().empty());

    CHECK(!make_ring(69).norm_euclidean());

    CHECK_THROWS_AS(make_ring(12), Error);
    CHECK_THROWS_AS(make_ring(0), Error);
    CHECK_THROWS_AS(make_ring(1), Error);
    CHECK_THROWS_AS(make_ring(-4), Error);
}

TEST_CASE("unit and two-divisor invariants") {
    for (long d : {-1L, -2L, -3L, -7L, -11L}) {
        Ring ring = make_ring(d);
        for (const auto& u : ring.units()) {
            CHECK(ring.norm(u) == 1);
            bool has_neg = false;
            for (const auto& v : ring.units())
                if (v == -u) has_neg = true;
            CHECK(has_neg);
        }
        for (const auto& pi : ring.two_divisors()) {
            CHECK(ring.norm(pi) == 2);
            CHECK(ring.div_exact(E(2, 0), pi).has_value());
        }
        if (ring.two_is_prime()) CHECK(ring.two_divisors().empty());
    }
}

TEST_CASE("arithmetic examples") {
    Ring g = make_ring(-1);
    CHECK(g.mul(E(1, 1), E(1, -1)) == E(2, 0));
    CHECK(g.mul(E(1, -2), E(0, 1)) == E(2, 1));
    Ring e3 = make_ring(-3);
    CHECK(e3.mul(E(0, 1), E(0, 1)) == E(-1, 1));
}

TEST_CASE("conjugation") {
    Ring r2 = make_ring(-2);
    CHECK(r2.conj(E(-1, 2)) == E(-1, -2));
    Ring r5 = make_ring(5);
    CHECK(r5.conj(E(-3, 2)) == E(-1, -2));
    CHECK(r5.conj(E(5, 0)) == E(5, 0));

    for (long d : {-1L, -7L, 5L}) {
        Ring ring = make_ring(d);
        for (long a = -4; a <= 4; ++a) {
            for (long b = -4; b <= 4; ++b) {
                QuadInt x{a, b};
                CHECK(ring.conj(ring.conj(x)) == x);
                CHECK(ring.mul(x, ring.conj(x)) == QuadInt{ring.norm(x), 0});
                for (long c = -2; c <= 2; ++c) {
                    QuadInt y{c, 1 - c};
                    CHECK(ring.conj(x + y) == ring.conj(x) + ring.conj(y));
                    CHECK(ring.conj(ring.mul(x, y)) == ring.mul(ring.conj(x), ring.conj(y)));
                }
            }
        }
    }
}

TEST_CASE("norms") {
    CHECK(make_ring(-1).norm(E(1, 2)) == 5);
    CHECK(make_ring(-11).norm(E(1, 2)) == 15);
    CHECK(make_ring(-7).norm(E(0, 0)) == 0);

    // multiplicativity sweep
    for (long d : {-1L, -2L, -3L, -7L, -11L, 2L, 5L}) {
        Ring ring = make_ring(d);
        for (long a = -3; a <= 3; ++a)
            for (long b = -3; b <= 3; ++b)
                for (long c = -3; c <= 3; ++c) {
                    QuadInt x{a, b}, y{c, 2};
                    CHECK(ring.norm(ring.mul(x, y)) == ring.norm(x) * ring.norm(y));
                }
    }
}

TEST_CASE("div_by_four") {
    Ring g = make_ring(-1);
    auto [q1, r1] = g.div_by_four(E(7, 2));
    CHECK(q1 == E(2, 0));
    CHECK(r1 == E(-1, 2));
    auto [q2, r2] = g.div_by_four(E(-1, 2));
    CHECK(q2 == E(0, 0));
    CHECK(r2 == E(-1, 2));
    auto [q3, r3] = g.div_by_four(E(4, 0));
    CHECK(q3 == E(1, 0));
    CHECK(r3 == E(0, 0));

    // exactness, canonical window, class-function property
    Ring ring = make_ring(-11);
    for (long a = -20; a <= 20; ++a) {
        for (long b = -20; b <= 20; ++b) {
            QuadInt n{a, b};
            auto [q, r] = ring.div_by_four(n);
            CHECK(n == QuadInt{4 * q.a + r.a, 4 * q.b + r.b});
            CHECK(r.a >= -1);
            CHECK(r.a <= 2);
            CHECK(r.b >= -1);
            CHECK(r.b <= 2);
            auto r_shift = ring.div_by_four(n + E(4, -8)).remainder;
            CHECK(r == r_shift);
        }
    }
}

TEST_CASE("div_by_four census has sixteen classes") {
    Ring ring = make_ring(-2);
    std::vector<QuadInt> seen;
    for (long a = -8; a < 8; ++a) {
        for (long b = -8; b < 8; ++b) {
            QuadInt r = ring.div_by_four(QuadInt{a, b}).remainder;
            if (std::find(seen.begin(), seen.end(), r) == seen.end()) seen.push_back(r);
        }
    }
    CHECK(seen.size() == 16);
}

TEST_CASE("euclid_divmod") {
    Ring g = make_ring(-1);
    auto [q, r] = g.euclid_divmod(E(5, 0), E(1, 2));
    CHECK(q == E(1, -2));
    CHECK(r == E(0, 0));
    auto self = g.euclid_divmod(E(3, 7), E(3, 7));
    CHECK(self.quotient == E(1, 0));
    CHECK(self.remainder == E(0, 0));

    // contract sweep: N(x) <= 100, n = 2
    for (long a = -10; a <= 10; ++a) {
        for (long b = -10; b <= 10; ++b) {
            if (a * a + b * b > 100) continue;
            auto [qq, rr] = g.euclid_divmod(QuadInt{a, b}, E(2, 0));
            CHECK(QuadInt{a, b} == g.mul(E(2, 0), qq) + rr);
            CHECK(g.norm(rr) < 4);
        }
    }

    CHECK_THROWS_AS(g.euclid_divmod(E(1, 0), E(0, 0)), Error);
    CHECK_THROWS_AS(make_ring(69).euclid_divmod(E(1, 0), E(2, 0)), Error);

    // indefinite norm case: rounding alone leaves |N(r)| = 6 here
    Ring s7 = make_ring(7);
    auto [q7, r7] = s7.euclid_divmod(E(1, 1), E(2, 0));
    CHECK(E(1, 1) == s7.mul(E(2, 0), q7) + r7);
    Integer nr = s7.norm(r7);
    if (nr < 0) nr = -nr;
    CHECK(nr < 4);
}

TEST_CASE("euclid_divmod contract over the positive norm-Euclidean rings") {
    for (long d : {2L, 3L, 5L, 6L, 7L, 11L, 13L, 17L, 19L, 21L, 29L, 33L, 37L, 41L, 57L, 73L}) {
        Ring ring = make_ring(d);
        for (long a = -6; a <= 6; ++a)
            for (long b = -6; b <= 6; ++b)
                for (long c = -3; c <= 3; ++c)
                    for (long e = -3; e <= 3; ++e) {
                        QuadInt x{a, b}, n{c, e};
                        if (n.is_zero()) continue;
                        auto [q, r] = ring.euclid_divmod(x, n);
                        CHECK(x == ring.mul(n, q) + r);
                        Integer nr = ring.norm(r);
                        if (nr < 0) nr = -nr;
                        Integer nn = ring.norm(n);
                        if (nn < 0) nn = -nn;
                        CHECK(nr < nn);
                    }
    }
}

TEST_CASE("euclid_divmod contract over the five negative rings") {
    for (long d : {-1L, -2L, -3L, -7L, -11L}) {
        Ring ring = make_ring(d);
        for (long a = -6; a <= 6; ++a)
            for (long b = -6; b <= 6; ++b)
                for (long c = -3; c <= 3; ++c)
                    for (long e = -3; e <= 3; ++e) {
                        QuadInt x{a, b}, n{c, e};
                        if (n.is_zero()) continue;
                        auto [q, r] = ring.euclid_divmod(x, n);
                        CHECK(x == ring.mul(n, q) + r);
                        CHECK(ring.norm(r) < ring.norm(n));
                    }
    }
}

TEST_CASE("int_rem_divmod") {
    Ring g = make_ring(-1);
    QuadInt div{1, -2};
    for (long a = -8; a <= 8; ++a) {
        for (long b = -8; b <= 8; ++b) {
            QuadInt x{a, b};
            auto [q, r] = g.int_rem_divmod(x, div);
            CHECK(r >= -2);
            CHECK(r <= 2);
            CHECK(x == g.mul(div, q) + QuadInt{r, 0});
        }
    }
    auto self = g.int_rem_divmod(div, div);
    CHECK(self.quotient == E(1, 0));
    CHECK(self.remainder == 0);

    Ring e = make_ring(-11);
    auto [q11, r11] = e.int_rem_divmod(E(7, 3), E(1, 2));
    CHECK(E(7, 3) == e.mul(E(1, 2), q11) + QuadInt{r11, 0});
    CHECK(r11 >= -7);
    CHECK(r11 <= 7);
    // unique canonical result of the stated procedure (oracle: window sweep)
    CHECK(q11 == E(3, -1));
    CHECK(r11 == -2);

    CHECK_THROWS_AS(g.int_rem_divmod(E(1, 0), E(1, 1)), Error);  // N = 2 even
    CHECK_THROWS_AS(g.int_rem_divmod(E(1, 0), E(0, 1)), Error);  // N = 1
    CHECK_THROWS_AS(g.int_rem_divmod(E(1, 0), E(5, 0)), Error);  // gcd(0, 25) != 1
}

TEST_CASE("int_rem bound for every engine divisor") {
    struct Case {
        long d;
        QuadInt div;
    };
    const Case cases[] = {{-1, E(1, -2)}, {-2, E(1, 1)},  {-2, E(1, 2)}, {-3, E(1, 1)},
                          {-7, E(1, -2)}, {-11, E(0, 1)}, {-11, E(1, 1)}, {-11, E(1, 2)}};
    for (const auto& c : cases) {
        Ring ring = make_ring(c.d);
        Integer half = (ring.norm(c.div) - 1) / 2;
        for (long a = -9; a <= 9; ++a) {
            for (long b = -9; b <= 9; ++b) {
                QuadInt x{a, b};
                auto [q, r] = ring.int_rem_divmod(x, c.div);
                CHECK(r <= half);
                CHECK(-r <= half);
                CHECK(x == ring.mul(c.div, q) + QuadInt{r, 0});
                CHECK(ring.div_exact(x - QuadInt{r, 0}, c.div).has_value());
            }
        }
    }
}

TEST_CASE("associates and canonical associate") {
    Ring g = make_ring(-1);
    auto assoc1 = g.associates(E(1, 0));
    CHECK(assoc1.size() == 4);
    CHECK(std::find(assoc1.begin(), assoc1.end(), E(0, 1)) != assoc1.end());
    CHECK(g.associates(E(1, -2)).size() == 4);

    for (long d : {-1L, -2L, -3L}) {
        Ring ring = make_ring(d);
        for (long a = -4; a <= 4; ++a) {
            for (long b = -4; b <= 4; ++b) {
                QuadInt x{a, b};
                auto [canon, u] = ring.canonical_associate(x);
                CHECK(ring.mul(u, x) == canon);
                CHECK(ring.canonical_associate(canon).first == canon);  // idempotent
                for (const auto& v : ring.units()) {
                    CHECK(ring.canonical_associate(ring.mul(v, x)).first == canon);
                }
            }
        }
    }
    CHECK_THROWS_AS(make_ring(5).associates(E(1, 0)), Error);
}

TEST_CASE("element text round trip") {
    CHECK(parse_element("1+2*w") == E(1, 2));
    CHECK(parse_element(" -1 - 2*w ") == E(-1, -2));
    CHECK(parse_element("w") == E(0, 1));
    CHECK(parse_element("-w") == E(0, -1));
    CHECK(parse_element("17") == E(17, 0));
    CHECK(parse_element("3-w") == E(3, -1));
    CHECK(parse_element("12*w") == E(0, 12));
    CHECK(format_element(E(-3, 1)) == "-3+w");
    CHECK(format_element(E(0, -2)) == "-2*w");
    CHECK(format_element(E(5, 0)) == "5");

    for (long a = -15; a <= 15; ++a)
        for (long b = -15; b <= 15; ++b) {
            QuadInt x{a, b};
            CHECK(parse_element(format_element(x)) == x);
        }

    CHECK_THROWS_AS(parse_element(""), Error);
    CHECK_THROWS_AS(parse_element("1+2"), Error);
    CHECK_THROWS_AS(parse_element("w+w"), Error);
    CHECK_THROWS_AS(parse_element("2x"), Error);
    CHECK_THROWS_AS(parse_element("1+2*w+3"), Error);
}

TEST_CASE("QuadRat equality is cross-multiplication in the ring") {
    Ring g = make_ring(-1);
    // 1/(1+w) == (1-w)/2
    QuadRat a{QuadInt{1, 0}, QuadInt{1, 1}};
    QuadRat b{QuadInt{1, -1}, QuadInt{2, 0}};
    CHECK(rat_equal(g, a, b));
    CHECK_FALSE(rat_equal(g, a, QuadRat{QuadInt{1, 0}, QuadInt{2, 0}}));
    CHECK(rat_sub(g, a, b).is_zero());
    QuadRat sum = rat_add(g, a, a);
    CHECK(rat_equal(g, sum, QuadRat{QuadInt{2, 0}, QuadInt{1, 1}}));
    CHECK_THROWS_AS(QuadRat(QuadInt{1, 0}, QuadInt{0, 0}), Error);
}

TEST_CASE("exceptional sets") {
    auto norms_of = [](const Ring& ring) {
        std::vector<long> norms;
        for (const auto& x : ring.exceptional_set()) {
            if (!x.is_zero()) norms.push_back(static_cast<long>(ring.norm(x)));
        }
        return norms;
    };
    CHECK(norms_of(make_ring(-1)).size() == 8);
    CHECK(norms_of(make_ring(-2)).size() == 8);
    CHECK(norms_of(make_ring(-3)).size() == 6);
    CHECK(norms_of(make_ring(-7)).size() == 6);
    Ring e11 = make_ring(-11);
    CHECK(norms_of(e11).size() == 10);
    CHECK(!e11.is_exceptional(QuadInt{2, 0}));
    CHECK(!e11.is_exceptional(QuadInt{-2, 0}));
    CHECK(e11.is_exceptional(QuadInt{2, -1}));
    CHECK(!make_ring(5).has_exceptional_set());
}
