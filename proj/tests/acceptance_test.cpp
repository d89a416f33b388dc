// Acceptance suite: one pass/fail line per criterion, exact arithmetic
// throughout. Exit code 0 iff every criterion holds.

#include <algorithm>
#include <cstdio>
#include <vector>

#include "quadfrac/engine.hpp"
#include "quadfrac/oracle.hpp"
#include "quadfrac/pell.hpp"
#include "quadfrac/verifier.hpp"

using namespace quadfrac;

namespace {

QuadInt E(long a, long b) { return QuadInt{a, b}; }

int failures_total = 0;

void report(int idx, const char* name, bool ok, const std::string& detail = "") {
    std::printf("[%s] criterion %d: %s%s%s\n", ok ? "PASS" : "FAIL", idx, name,
                detail.empty() ? "" : " -- ", detail.c_str());
    if (!ok) ++failures_total;
}

// --- criterion 1: exhaustive decomposition coverage, N <= 10^4, five rings ---
void criterion_theorem_scan() {
    const Integer bound = 10000;
    bool ok = true;
    std::string detail;
    for (long d : {-1L, -2L, -3L, -7L, -11L}) {
        Ring ring = make_ring(d);
        ScanReport rep = scan_theorem(ring, bound, 4);
        std::vector<QuadInt> expected_exceptional;
        for (const auto& e : ring.exceptional_set()) {
            if (!e.is_zero()) expected_exceptional.push_back(e);
        }
        bool ring_ok = rep.failures.empty() && rep.exceptional_hits == expected_exceptional &&
                       rep.attempted == rep.decomposed + static_cast<long>(rep.exceptional_hits.size());
        detail += "d=" + std::to_string(d) + ":" + std::to_string(rep.decomposed) + "/" +
                  std::to_string(rep.attempted) + (ring_ok ? " ok " : " FAIL ");
        ok = ok && ring_ok;
    }
    report(1, "exhaustive decomposition coverage (N <= 10^4, zero failures)", ok, detail);
}

// --- criterion 2: positive-d identity regression ---
void criterion_pell() {
    bool ok = true;
    std::string detail;
    for (long d : {2L, 3L, 5L, 6L, 7L, 11L, 13L, 17L, 19L, 21L, 29L, 33L, 37L, 41L, 57L, 73L}) {
        Ring ring = make_ring(d);
        bool this_ok = false;
        try {
            Decomposition dec = pell_two_term(d);
            this_ok = verify(ring, E(1, 0), dec);
            if (dec.recipe_tag == tags::kPellTwoTerm && ring.omega_kind() == OmegaKind::Sqrt) {
                // Pell relation under the (4a-1, 4b) relabeling
                Integer a = dec.terms[0].den.a, b = dec.terms[0].den.b;
                this_ok = this_ok && (4 * a - 1) * (4 * a - 1) - Integer(d) * 16 * b * b == 1;
            }
            if (d == 19) {
                this_ok = this_ok && dec.recipe_tag == tags::kPellThreeTerm &&
                          dec.terms.size() == 3 && dec.terms[0].den == E(1, 0) &&
                          dec.terms[1].den == E(57, 13) && dec.terms[2].den == E(57, -13);
            }
            if (d == 73) {
                bool has = false;
                for (const auto& t : dec.terms) {
                    Integer mag = t.den.b < 0 ? Integer(-t.den.b) : t.den.b;
                    if (mag == 133500) has = true;
                }
                this_ok = this_ok && has;
            }
        } catch (const Error&) {
            this_ok = false;
        }
        if (!this_ok) detail += "d=" + std::to_string(d) + " FAIL ";
        ok = ok && this_ok;
    }
    report(2, "Pell identity regression for all sixteen positive d", ok, detail);
}

// --- criterion 3: known identity constants verify exactly ---
void criterion_constants() {
    bool ok = true;
    Ring g = make_ring(-1);
    auto check = [&](const Ring& ring, QuadInt n, std::vector<UnitFraction> terms) {
        ok = ok && verify(ring, n, Decomposition{std::move(terms), "constant"});
    };
    check(g, E(1, 2), {{+1, E(0, 1)}, {+1, E(1, 1)}, {+1, E(3, 1)}});            // 4/(1+2w) in Z[i]
    check(g, E(3, 1), {{+1, E(1, 1)}, {+1, E(2, 0)}, {+1, E(4, -2)}});           // 4/(3+w), mixed-sign form
    check(g, E(3, 1), {{+1, E(1, 0)}, {+1, E(1, 3)}, {+1, E(5, 5)}});            // 4/(3+w), cone form
    check(make_ring(69), E(1, 0), {{+1, E(1710, 468)}, {+1, E(2178, -468)}});    // two-term identity, d=69
    check(g, E(-1, 2), {{+1, E(0, 1)}, {+1, E(-1, 1)}, {+1, E(-3, 1)}});         // 4/(-1+2w) in Z[i]
    for (long d : {-1L, -2L, -3L, -7L, -11L}) {
        Ring ring = make_ring(d);
        for (const auto& entry : special_table(ring)) {
            ok = ok && verify(ring, entry.key, Decomposition{entry.terms, "table"});
        }
    }
    report(3, "known identity constants and all special-table entries verify exactly", ok);
}

// --- criterion 4: integer fallback correction ---
void criterion_integer_fallback() {
    Ring g = make_ring(-1);
    bool ok = true;
    for (long n = 2; n <= 1000; ++n) {
        ok = ok && verify(g, E(n, 0), decompose_integer(n));
        ok = ok && verify(g, E(-n, 0), decompose_integer(-n));
    }
    // the (k+1)(4k+1) variant fails at n = 7 (k = 1)
    bool variant_fails =
        !verify(g, E(7, 0), Decomposition{{{+1, E(2, 0)}, {+1, E(10, 0)}}, "variant"});
    ok = ok && variant_fails;
    report(4, "integer fallback verifies for 2 <= |n| <= 1000; (k+1)(4k+1) variant fails at 7", ok);
}

// --- criterion 5: division and closure property suites ---
bool prop_div4_census() {
    for (long d : {-1L, -2L, -3L, -7L, -11L}) {
        Ring ring = make_ring(d);
        std::vector<QuadInt> classes;
        for (long a = -8; a < 8; ++a) {
            for (long b = -8; b < 8; ++b) {
                QuadInt n{a, b};
                auto [q, r] = ring.div_by_four(n);
                if (!(n == QuadInt{4 * q.a + r.a, 4 * q.b + r.b})) return false;
                if (r.a < -1 || r.a > 2 || r.b < -1 || r.b > 2) return false;
                if (std::find(classes.begin(), classes.end(), r) == classes.end())
                    classes.push_back(r);
            }
        }
        if (classes.size() != 16) return false;
    }
    return true;
}

bool prop_int_rem_bounds() {
    struct Case {
        long d;
        QuadInt div;
    };
    const Case cases[] = {{-1, E(1, -2)}, {-2, E(1, 1)},  {-2, E(1, 2)},  {-3, E(1, 1)},
                          {-7, E(1, -2)}, {-11, E(0, 1)}, {-11, E(1, 1)}, {-11, E(1, 2)}};
    for (const auto& c : cases) {
        Ring ring = make_ring(c.d);
        Integer half = (ring.norm(c.div) - 1) / 2;
        for (long a = -12; a <= 12; ++a) {
            for (long b = -12; b <= 12; ++b) {
                auto [q, r] = ring.int_rem_divmod(QuadInt{a, b}, c.div);
                if (r > half || -r > half) return false;
                if (!(QuadInt{a, b} == ring.mul(c.div, q) + QuadInt{r, 0})) return false;
                if (!ring.div_exact(QuadInt{a, b} - QuadInt{r, 0}, c.div)) return false;
            }
        }
    }
    return true;
}

bool prop_symmetry_closure() {
    for (long d : {-1L, -2L, -3L, -7L, -11L}) {
        Ring ring = make_ring(d);
        for (const auto& n : lattice_points(ring, 500)) {
            if (ring.is_exceptional(n)) continue;
            if (!verify(ring, n, decompose(ring, n))) return false;
            for (const auto& u : ring.units()) {
                QuadInt un = ring.mul(u, n);
                if (!verify(ring, un, decompose(ring, un))) return false;
            }
            QuadInt cn = ring.conj(n);
            if (!verify(ring, cn, decompose(ring, cn))) return false;
        }
    }
    return true;
}

bool prop_oracle_engine_agreement() {
    for (long d : {-1L, -2L, -3L, -7L, -11L}) {
        Ring ring = make_ring(d);
        for (const auto& n : lattice_points(ring, 200)) {
            if (ring.is_exceptional(n)) continue;
            Decomposition dec = decompose(ring, n);
            Integer maxnorm = 1;
            for (const auto& t : dec.terms) maxnorm = std::max(maxnorm, ring.norm(t.den));
            BruteForceOptions opts;
            opts.term_count = static_cast<int>(dec.terms.size());
            opts.den_norm_bound = maxnorm;
            opts.max_results = 1;
            if (brute_force(ring, n, opts).empty()) return false;
            // the engine's own tuple appears when enumeration is feasible
            if (maxnorm <= 300 && ring.norm(n) <= 50) {
                BruteForceOptions full = opts;
                full.max_results = 1000000;
                auto hits = brute_force(ring, n, full);
                std::vector<QuadInt> want;
                for (const auto& t : dec.terms) want.push_back(t.sign < 0 ? -t.den : t.den);
                std::sort(want.begin(), want.end());
                bool found = false;
                for (const auto& h : hits) {
                    std::vector<QuadInt> got;
                    for (const auto& t : h.terms) got.push_back(t.den);
                    std::sort(got.begin(), got.end());
                    if (got == want) found = true;
                }
                if (!found) return false;
            }
        }
    }
    return true;
}

void criterion_property_suites() {
    bool a = prop_div4_census();
    bool b = prop_int_rem_bounds();
    bool c = prop_symmetry_closure();
    bool d = prop_oracle_engine_agreement();
    std::string detail = std::string("div4-census=") + (a ? "ok" : "FAIL") +
                         " int-rem-bounds=" + (b ? "ok" : "FAIL") +
                         " unit/conj-closure(N<=500)=" + (c ? "ok" : "FAIL") +
                         " oracle-agreement(N<=200)=" + (d ? "ok" : "FAIL");
    report(5, "division and closure property suites", a && b && c && d, detail);
}

// --- criterion 6: conjecture probe (a report, not a refutation gate) ---
void criterion_conjecture_probe() {
    ScanReport rep = scan_conjecture(50, 10000, 4);
    for (const auto& open : rep.failures) {
        std::printf("  open instance: %s\n", format_element(open).c_str());
    }
    std::string detail = std::to_string(rep.decomposed) + "/" + std::to_string(rep.attempted) +
                         " decomposed in-cone, " + std::to_string(rep.failures.size()) +
                         " open instances (reported, not a failure)";
    bool ran = rep.attempted > 0 &&
               rep.attempted ==
                   rep.decomposed + static_cast<long>(rep.failures.size() + rep.exceptional_hits.size());
    report(6, "conjecture desk-scale probe (N <= 50, den bound 10^4)", ran, detail);
}

}  // namespace

int main() {
    std::printf("== acceptance suite ==\n");
    criterion_theorem_scan();
    criterion_pell();
    criterion_constants();
    criterion_integer_fallback();
    criterion_property_suites();
    criterion_conjecture_probe();
    if (failures_total == 0) {
        std::printf("all criteria passed\n");
        return 0;
    }
    std::printf("%d criterion(s) failed\n", failures_total);
    return 1;
}
