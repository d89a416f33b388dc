#include "quadfrac/engine.hpp"

#include <algorithm>
#include <map>
#include <mutex>

#include "quadfrac/verifier.hpp"

namespace quadfrac {

namespace {

enum class BranchKind {
    FactorDivisor,  // r = 0: n' = divisor * (4cd - 1), minus-one recipe scaled
    FactorOther,    // p(q,-D) always composite: factor out a fixed prime, recurse
    ROne,           // |r| = 1: the q = Db+1 split (negated twin for r = -1)
    SQOmega,        // divisor*s = q + sign(r)*omega (d = -1 only)
    SP,             // divisor*s = p + eps, eps resolved by exact division
    SPQ             // divisor*s = p*q - 1
};

struct Branch {
    BranchKind kind;
    QuadInt factor;  // FactorOther only
};

struct DivisorPlan {
    bool minus_one = false;
    QuadInt divisor;
    QuadInt cls;  // canonical div4 representative of the handled class
    std::map<long, Branch> branches;  // keyed by |r|
};

std::vector<DivisorPlan> build_plans(const Ring& ring) {
    const QuadInt w{0, 1};
    std::vector<DivisorPlan> plans;
    auto cls_of = [&](const QuadInt& x) { return ring.div_by_four(x).remainder; };
    auto add_minus_one = [&] {
        DivisorPlan p;
        p.minus_one = true;
        p.cls = cls_of(QuadInt{-1, 0});
        plans.push_back(std::move(p));
    };
    auto add = [&](QuadInt divisor, std::map<long, Branch> branches) {
        DivisorPlan p;
        p.divisor = divisor;
        p.cls = cls_of(-divisor);
        p.branches = std::move(branches);
        plans.push_back(std::move(p));
    };
    const Branch FD{BranchKind::FactorDivisor, {}};
    const Branch R1{BranchKind::ROne, {}};
    const Branch QW{BranchKind::SQOmega, {}};
    const Branch P{BranchKind::SP, {}};
    const Branch PQ{BranchKind::SPQ, {}};
    switch (ring.d()) {
        case -1:
            add_minus_one();
            add(QuadInt{1, -2}, {{0, FD}, {1, R1}, {2, QW}});
            break;
        case -2:
            add_minus_one();
            add(QuadInt{1, 1}, {{0, FD}, {1, R1}, {2, P}});
            add(QuadInt{1, 2},
                {{0, FD}, {1, R1}, {2, P}, {3, Branch{BranchKind::FactorOther, QuadInt{1, -1}}}, {4, PQ}});
            break;
        case -3:
            add_minus_one();
            add(QuadInt{1, 1}, {{0, FD}, {1, R1}, {2, P}});
            break;
        case -7:
            add_minus_one();
            add(QuadInt{1, -2}, {{0, FD}, {1, R1}, {2, P}, {3, PQ}});
            break;
        case -11:
            add_minus_one();
            add(w, {{0, FD}, {1, R1}, {2, P}});
            add(QuadInt{1, 1}, {{0, FD}, {1, R1}, {2, PQ}, {3, PQ}, {4, P}});
            add(QuadInt{1, 2},
                {{0, FD},
                 {1, R1},
                 {2, PQ},
                 {3, Branch{BranchKind::FactorOther, QuadInt{1, -1}}},
                 {4, P},
                 {5, Branch{BranchKind::FactorOther, QuadInt{2, -1}}},
                 {6, Branch{BranchKind::FactorOther, QuadInt{1, -1}}},
                 {7, PQ}});
            break;
        default:
            break;
    }
    return plans;
}

const std::vector<DivisorPlan>& plans_for(const Ring& ring) {
    static std::mutex mu;
    static std::map<long, std::vector<DivisorPlan>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(ring.d());
    if (it == cache.end()) it = cache.emplace(ring.d(), build_plans(ring)).first;
    return it->second;
}

std::vector<SymmetryTransform> all_transforms(const Ring& ring) {
    std::vector<SymmetryTransform> out;
    for (const auto& u : ring.units()) out.push_back({u, false});
    for (const auto& u : ring.units()) out.push_back({u, true});
    return out;
}

QuadInt apply_transform(const Ring& ring, const SymmetryTransform& t, const QuadInt& n) {
    QuadInt x = t.conjugate ? ring.conj(n) : n;
    return ring.mul(t.unit, x);
}

// Maps denominators of a decomposition of 4/n' back to one of 4/n, where
// n' = unit * conj^c(n). Units here have norm 1, so unit^-1 = conj(unit).
std::vector<UnitFraction> transform_back(const Ring& ring, const SymmetryTransform& t,
                                         std::vector<UnitFraction> terms) {
    QuadInt uinv = ring.conj(t.unit);
    for (auto& term : terms) {
        term.den = ring.mul(term.den, uinv);
        if (t.conjugate) term.den = ring.conj(term.den);
    }
    return terms;
}

std::vector<UnitFraction> scale_terms(const Ring& ring, std::vector<UnitFraction> terms,
                                      const QuadInt& factor) {
    for (auto& t : terms) t.den = ring.mul(t.den, factor);
    return terms;
}

std::vector<UnitFraction> negate_dens(std::vector<UnitFraction> terms) {
    for (auto& t : terms) t.den = -t.den;
    return terms;
}

bool all_nonzero(const std::vector<UnitFraction>& terms) {
    for (const auto& t : terms)
        if (t.den.is_zero()) return false;
    return true;
}

std::string s_tag(const Ring& ring, const QuadInt& divisor, long r) {
    return std::string("s-recipe:") + std::to_string(ring.d()) + ":" + format_element(divisor) + ":" +
           std::to_string(r);
}

Decomposition decompose_impl(const Ring& ring, const QuadInt& n, int depth);

// n' = 4m - D with m = D*cd + r. Returns terms for 4/n' or nullopt when the
// parameterization degenerates for this branch.
std::optional<Decomposition> eval_branch(const Ring& ring, const Branch& branch, const QuadInt& divisor,
                                         const QuadInt& nprime, const QuadInt& cd, const Integer& r,
                                         int depth) {
    const QuadInt q = ring.mul(divisor, cd) + QuadInt{r, 0};  // = m
    const QuadInt p = nprime;
    if (q.is_zero()) return std::nullopt;
    switch (branch.kind) {
        case BranchKind::FactorDivisor: {
            if (cd.is_zero()) return std::nullopt;  // n' = -D, table territory
            QuadInt m1 = QuadInt{4 * cd.a - 1, 4 * cd.b};  // 4cd - 1
            QuadInt d1 = ring.mul(divisor, cd);
            std::vector<UnitFraction> terms{{+1, d1}, {+1, ring.mul(d1, m1)}};
            if (!all_nonzero(terms)) return std::nullopt;
            return Decomposition{std::move(terms), tags::kFactorScaled};
        }
        case BranchKind::FactorOther: {
            auto m1 = ring.div_exact(nprime, branch.factor);
            if (!m1 || m1->is_zero() || ring.is_exceptional(*m1)) return std::nullopt;
            Decomposition sub = decompose_impl(ring, *m1, depth + 1);
            return Decomposition{scale_terms(ring, std::move(sub.terms), branch.factor),
                                 tags::kFactorScaled};
        }
        case BranchKind::ROne: {
            if (cd.is_zero()) return std::nullopt;
            if (r == 1) {
                Decomposition sub = recipe_r_one(ring, divisor, cd);
                return sub;
            }
            // r = -1: -n' = 4((-D)cd + 1) - (-D)
            Decomposition sub = recipe_r_one(ring, -divisor, cd);
            return Decomposition{negate_dens(std::move(sub.terms)), sub.recipe_tag};
        }
        case BranchKind::SQOmega: {
            const QuadInt w{0, 1};
            QuadInt target = r > 0 ? q + w : q - w;
            auto s = ring.div_exact(target, divisor);
            if (!s || s->is_zero()) return std::nullopt;
            QuadInt ps = ring.mul(p, *s);
            QuadInt wpqs = ring.mul(w, ring.mul(ps, q));
            int third_sign = r > 0 ? -1 : +1;
            std::vector<UnitFraction> terms{{+1, q}, {+1, ps}, {third_sign, wpqs}};
            if (!all_nonzero(terms)) return std::nullopt;
            return Decomposition{std::move(terms), s_tag(ring, divisor, static_cast<long>(r))};
        }
        case BranchKind::SP: {
            for (int eps : {+1, -1}) {
                auto s = ring.div_exact(p + QuadInt{eps, 0}, divisor);
                if (!s || s->is_zero()) continue;
                QuadInt qs = ring.mul(q, *s);
                QuadInt pqs = ring.mul(p, qs);
                std::vector<UnitFraction> terms{{+1, q}, {+1, qs}, {eps, pqs}};
                if (!all_nonzero(terms)) continue;
                return Decomposition{std::move(terms), s_tag(ring, divisor, static_cast<long>(r))};
            }
            return std::nullopt;
        }
        case BranchKind::SPQ: {
            QuadInt pq = ring.mul(p, q);
            auto s = ring.div_exact(pq - QuadInt{1, 0}, divisor);
            if (!s || s->is_zero()) return std::nullopt;
            QuadInt pqs = ring.mul(pq, *s);
            std::vector<UnitFraction> terms{{+1, q}, {+1, *s}, {-1, pqs}};
            if (!all_nonzero(terms)) return std::nullopt;
            return Decomposition{std::move(terms), s_tag(ring, divisor, static_cast<long>(r))};
        }
    }
    return std::nullopt;
}

// Handles one transformed element n' landing in a divisor class: the
// canonical integer remainder first, then the two shifted representations
// m = D(cd +- conj(D)) + (r -+ N(D)).
std::optional<Decomposition> eval_divisor_plan(const Ring& ring, const DivisorPlan& plan,
                                               const QuadInt& nprime, int depth) {
    const QuadInt& D = plan.divisor;
    QuadInt m = nprime + D;
    m = QuadInt{m.a / 4, m.b / 4};
    auto [cd0, r0] = ring.int_rem_divmod(m, D);
    Integer nd = ring.norm(D);
    QuadInt conjD = ring.conj(D);
    struct Rep {
        QuadInt cd;
        Integer r;
    };
    std::vector<Rep> reps{{cd0, r0}, {cd0 + conjD, r0 - nd}, {cd0 - conjD, r0 + nd}};
    for (const auto& rep : reps) {
        if (rep.r < 0 ? -rep.r > 1000 : rep.r > 1000) continue;
        long abs_r = static_cast<long>(rep.r < 0 ? -rep.r : rep.r);
        auto it = plan.branches.find(abs_r);
        if (it == plan.branches.end()) continue;
        auto got = eval_branch(ring, it->second, D, nprime, rep.cd, rep.r, depth);
        if (got) return got;
    }
    return std::nullopt;
}

// Last-resort re-anchoring of the initial division: n' = 4(m+delta) - (D+4*delta)
// for small delta, then the same three split identities with divisor D+4*delta.
std::optional<Decomposition> eval_resplit(const Ring& ring, const QuadInt& D, const QuadInt& nprime) {
    QuadInt m = nprime + D;
    m = QuadInt{m.a / 4, m.b / 4};
    std::vector<QuadInt> deltas;
    for (long a = -2; a <= 2; ++a)
        for (long b = -2; b <= 2; ++b)
            if (a != 0 || b != 0) deltas.push_back(QuadInt{a, b});
    std::sort(deltas.begin(), deltas.end(), [&](const QuadInt& x, const QuadInt& y) {
        Integer nx = ring.norm(x), ny = ring.norm(y);
        if (nx != ny) return nx < ny;
        return x < y;
    });
    const QuadInt four{4, 0};
    for (const auto& delta : deltas) {
        QuadInt d2 = D + ring.mul(four, delta);
        QuadInt q2 = m + delta;
        if (d2.is_zero() || q2.is_zero()) continue;
        const QuadInt p = nprime;
        std::string tag = std::string("resplit:") + std::to_string(ring.d());
        // p*q - 1 split
        QuadInt pq = ring.mul(p, q2);
        if (auto s = ring.div_exact(pq - QuadInt{1, 0}, d2); s && !s->is_zero()) {
            std::vector<UnitFraction> terms{{+1, q2}, {+1, *s}, {-1, ring.mul(pq, *s)}};
            if (all_nonzero(terms) && verify(ring, nprime, Decomposition{terms, tag})) {
                return Decomposition{std::move(terms), tag};
            }
        }
        // p +- 1 split
        for (int eps : {+1, -1}) {
            if (auto s = ring.div_exact(p + QuadInt{eps, 0}, d2); s && !s->is_zero()) {
                QuadInt qs = ring.mul(q2, *s);
                std::vector<UnitFraction> terms{{+1, q2}, {+1, qs}, {eps, ring.mul(p, qs)}};
                if (all_nonzero(terms) && verify(ring, nprime, Decomposition{terms, tag})) {
                    return Decomposition{std::move(terms), tag};
                }
            }
        }
        // q - 1 split with divisor d2
        if (auto b2 = ring.div_exact(q2 - QuadInt{1, 0}, d2); b2 && !b2->is_zero()) {
            QuadInt pb = ring.mul(p, *b2);
            std::vector<UnitFraction> terms{{+1, q2}, {+1, pb}, {-1, ring.mul(pb, q2)}};
            if (all_nonzero(terms) && verify(ring, nprime, Decomposition{terms, tag})) {
                return Decomposition{std::move(terms), tag};
            }
        }
    }
    return std::nullopt;
}

Decomposition checked(const Ring& ring, const QuadInt& n, Decomposition dec) {
    if (!verify(ring, n, dec)) {
        fail(ErrorKind::InvariantViolation,
             "engine produced an unverified decomposition for " + format_element(n));
    }
    return dec;
}

Decomposition decompose_impl(const Ring& ring, const QuadInt& n, int depth) {
    if (depth > 64) fail(ErrorKind::InvariantViolation, "decompose recursion depth exceeded");
    if (n.is_zero()) fail(ErrorKind::OutOfDomain, "decompose: n must be nonzero");
    if (ring.is_exceptional(n)) {
        fail(ErrorKind::Exceptional, "decompose: " + format_element(n) + " lies in E_" +
                                         std::to_string(ring.d()) + " (norm bound " +
                                         ring.exceptional_norm_bound().str() + ")");
    }
    if (!ring.has_exceptional_set()) {
        fail(ErrorKind::Unsupported,
             "decompose: constructive engine covers d in {-1,-2,-3,-7,-11}, got d=" +
                 std::to_string(ring.d()));
    }

    if (auto hit = special_table_lookup(ring, n)) return checked(ring, n, *hit);

    // n = 4m exactly
    auto [q4, r4] = ring.div_by_four(n);
    if (r4.is_zero()) {
        return checked(ring, n, Decomposition{{{+1, q4}}, tags::kEvenScaled});
    }
    // n = 2m with 2 prime in the ring
    if (ring.two_is_prime() && n.a % 2 == 0 && n.b % 2 == 0) {
        QuadInt m{n.a / 2, n.b / 2};
        return checked(ring, n, Decomposition{{{+1, m}, {+1, m}}, tags::kEvenScaled});
    }

    const auto& plans = plans_for(ring);
    const auto transforms = all_transforms(ring);

    for (const auto& t : transforms) {
        QuadInt np = apply_transform(ring, t, n);
        QuadInt cls = ring.div_by_four(np).remainder;
        for (const auto& plan : plans) {
            if (cls != plan.cls) continue;
            if (plan.minus_one) {
                QuadInt a{(np.a + 1) / 4, np.b / 4};
                if (a.is_zero()) break;
                Decomposition sub = recipe_minus_one(ring, a);
                return checked(ring, n,
                               Decomposition{transform_back(ring, t, std::move(sub.terms)),
                                             sub.recipe_tag});
            }
            if (auto got = eval_divisor_plan(ring, plan, np, depth)) {
                return checked(ring, n,
                               Decomposition{transform_back(ring, t, std::move(got->terms)),
                                             got->recipe_tag});
            }
        }
    }

    // Even case: strip one prime divisor of 2 and recurse.
    for (const auto& pi : ring.two_divisors()) {
        auto m = ring.div_exact(n, pi);
        if (!m || m->is_zero() || ring.is_exceptional(*m)) continue;
        Decomposition sub = decompose_impl(ring, *m, depth + 1);
        return checked(ring, n,
                       Decomposition{scale_terms(ring, std::move(sub.terms), pi), tags::kEvenScaled});
    }

    // Degenerate edge states: re-anchor the initial division.
    for (const auto& t : transforms) {
        QuadInt np = apply_transform(ring, t, n);
        QuadInt cls = ring.div_by_four(np).remainder;
        for (const auto& plan : plans) {
            if (plan.minus_one || cls != plan.cls) continue;
            if (auto got = eval_resplit(ring, plan.divisor, np)) {
                return checked(ring, n,
                               Decomposition{transform_back(ring, t, std::move(got->terms)),
                                             got->recipe_tag});
            }
        }
    }

    fail(ErrorKind::InvariantViolation,
         "decompose: no constructive route for " + format_element(n) + " in d=" +
             std::to_string(ring.d()));
}

}  // namespace

Decomposition decompose_integer(const Integer& n) {
    Integer mag = n < 0 ? Integer(-n) : n;
    if (mag < 2) fail(ErrorKind::OutOfDomain, "decompose_integer: |n| must be at least 2");
    Integer m4 = floor_mod(n, 4);
    Decomposition dec;
    dec.recipe_tag = tags::kEq2Integer;
    if (n % 2 == 0) {
        Integer k = n / 2;
        dec.terms = {{+1, QuadInt{k, 0}}, {+1, QuadInt{k, 0}}};
    } else if (m4 == 1) {
        Integer k = (n - 1) / 4;
        dec.terms = {{+1, QuadInt{k, 0}}, {-1, QuadInt{k * n, 0}}};
    } else {
        Integer k = (n - 3) / 4;
        dec.terms = {{+1, QuadInt{k + 1, 0}}, {+1, QuadInt{(k + 1) * n, 0}}};
    }
    return dec;
}

Decomposition recipe_minus_one(const Ring& ring, const QuadInt& a) {
    if (a.is_zero()) fail(ErrorKind::OutOfDomain, "recipe_minus_one: a must be nonzero");
    QuadInt n = QuadInt{4 * a.a - 1, 4 * a.b};
    return Decomposition{{{+1, a}, {+1, ring.mul(a, n)}}, tags::kProp5MinusOne};
}

Decomposition recipe_r_one(const Ring& ring, const QuadInt& divisor, const QuadInt& b) {
    if (b.is_zero()) fail(ErrorKind::OutOfDomain, "recipe_r_one: b must be nonzero");
    QuadInt nb1 = ring.mul(divisor, b) + QuadInt{1, 0};
    if (nb1.is_zero()) fail(ErrorKind::OutOfDomain, "recipe_r_one: Nb+1 must be nonzero");
    QuadInt p = QuadInt{4 * nb1.a, 4 * nb1.b} - divisor;
    QuadInt pb = ring.mul(p, b);
    return Decomposition{{{+1, nb1}, {+1, pb}, {-1, ring.mul(pb, nb1)}}, tags::kProp5ROne};
}

Decomposition recipe_s(const Ring& ring, const QuadInt& divisor, long r, const QuadInt& cd) {
    const auto& plans = plans_for(ring);
    for (const auto& plan : plans) {
        if (plan.minus_one || plan.divisor != divisor) continue;
        auto it = plan.branches.find(r < 0 ? -r : r);
        if (it == plan.branches.end()) break;
        BranchKind k = it->second.kind;
        if (k != BranchKind::SQOmega && k != BranchKind::SP && k != BranchKind::SPQ) break;
        QuadInt q = ring.mul(divisor, cd) + QuadInt{r, 0};
        QuadInt p = QuadInt{4 * q.a, 4 * q.b} - divisor;
        auto got = eval_branch(ring, it->second, divisor, p, cd, Integer(r), 0);
        if (!got) {
            fail(ErrorKind::InvariantViolation,
                 "recipe_s: branch divisibility failed for " + s_tag(ring, divisor, r));
        }
        if (!verify(ring, p, *got)) {
            fail(ErrorKind::InvariantViolation, "recipe_s: output failed verification");
        }
        return *got;
    }
    fail(ErrorKind::Unsupported, "recipe_s: unsupported branch (d=" + std::to_string(ring.d()) + ", divisor=" +
                                     format_element(divisor) + ", r=" + std::to_string(r) + ")");
}

std::optional<SymmetryReduction> reduce_by_symmetry(const Ring& ring, const QuadInt& n) {
    if (!ring.has_exceptional_set()) {
        fail(ErrorKind::Unsupported, "reduce_by_symmetry: d must be in {-1,-2,-3,-7,-11}");
    }
    const auto& plans = plans_for(ring);
    for (const auto& t : all_transforms(ring)) {
        QuadInt np = apply_transform(ring, t, n);
        QuadInt cls = ring.div_by_four(np).remainder;
        for (const auto& plan : plans) {
            if (cls == plan.cls) return SymmetryReduction{t, np};
        }
    }
    return std::nullopt;
}

const std::vector<TableEntry>& special_table(const Ring& ring) {
    static std::mutex mu;
    static std::map<long, std::vector<TableEntry>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(ring.d());
    if (it != cache.end()) return it->second;

    std::vector<TableEntry> t;
    auto E = [](long a, long b) { return QuadInt{a, b}; };
    auto add = [&](QuadInt key, std::vector<UnitFraction> terms) {
        t.push_back({std::move(key), std::move(terms)});
    };
    switch (ring.d()) {
        case -1:
            // (1+w)^2 and -(1-2w)
            add(E(0, 2), {{+1, E(0, 1)}, {+1, E(0, 2)}, {+1, E(0, 2)}});
            add(E(-1, 2), {{+1, E(0, 1)}, {+1, E(-1, 1)}, {+1, E(-3, 1)}});
            break;
        case -2:
            // w^2, (1+w)^2, (1-w)(1+w), w(1+w)
            add(E(-2, 0), {{+1, E(-1, 0)}, {+1, E(-2, 0)}, {+1, E(-2, 0)}});
            add(E(-1, 2), {{+1, E(0, 1)}, {+1, E(-2, 1)}, {+1, E(-1, 2)}});
            add(E(3, 0), {{+1, E(2, 0)}, {+1, E(2, 0)}, {+1, E(3, 0)}});
            add(E(-2, 1), {{+1, E(-1, 0)}, {+1, E(0, 1)}, {+1, E(-2, 1)}});
            break;
        case -3:
            add(E(2, 0), {{+1, E(1, 0)}, {+1, E(2, 0)}, {+1, E(2, 0)}});
            add(E(1, 1), {{+1, E(1, 0)}, {+1, E(0, 1)}, {+1, E(1, 1)}});
            break;
        case -7:
            // w^2, (1-w)^2, w(1-w) = 2, -(1-2w)
            add(E(-2, 1), {{+1, E(-1, 0)}, {+1, E(-1, 1)}, {+1, E(-1, 1)}});
            add(E(-1, -1), {{+1, E(-1, 0)}, {+1, E(0, -1)}, {+1, E(0, -1)}});
            add(E(2, 0), {{+1, E(1, 0)}, {+1, E(2, 0)}, {+1, E(2, 0)}});
            add(E(-1, 2), {{+1, E(0, 1)}, {+1, E(-1, 1)}, {+1, E(-2, 4)}});
            break;
        case -11:
            // 2, w^2, (1+w)^2, w(1-w) = 3, w(1+w), (1-w)(1+w), (1+w)(2-w) = 5.
            // The (1+w)^2 entry is the verified corrected form; the variant
            // with 1/2 and 1/(12-18w) does not sum to 4/(1+w)^2.
            add(E(2, 0), {{+1, E(1, 0)}, {+1, E(2, 0)}, {+1, E(2, 0)}});
            add(E(-3, 1), {{+1, E(-1, 0)}, {+1, E(-3, 1)}, {+1, E(0, 1)}});
            add(E(-2, 3), {{+1, E(-1, 1)}, {+1, E(-2, 3)}, {+1, E(7, 2)}});
            add(E(3, 0), {{+1, E(2, 0)}, {+1, E(2, 0)}, {+1, E(3, 0)}});
            add(E(-3, 2), {{+1, E(-1, 0)}, {+1, E(0, 1)}, {+1, E(1, 1)}});
            add(E(4, -1), {{+1, E(1, 0)}, {+1, E(0, -1)}, {+1, E(3, 3)}});
            add(E(5, 0), {{+1, E(2, 0)}, {+1, E(4, 0)}, {+1, E(20, 0)}});
            break;
        default:
            break;
    }
    return cache.emplace(ring.d(), std::move(t)).first->second;
}

std::optional<Decomposition> special_table_lookup(const Ring& ring, const QuadInt& n) {
    if (!ring.has_exceptional_set()) return std::nullopt;
    auto canon_n = ring.canonical_associate(n).first;
    auto canon_cn = ring.canonical_associate(ring.conj(n)).first;
    for (const auto& entry : special_table(ring)) {
        auto canon_k = ring.canonical_associate(entry.key).first;
        if (canon_n == canon_k) {
            for (const auto& u : ring.units()) {
                if (ring.mul(u, entry.key) != n) continue;
                std::vector<UnitFraction> terms = entry.terms;
                for (auto& term : terms) term.den = ring.mul(u, term.den);
                return Decomposition{std::move(terms), tags::kSpecialTable};
            }
        }
        if (canon_cn == canon_k) {
            for (const auto& u : ring.units()) {
                if (ring.mul(u, entry.key) != ring.conj(n)) continue;
                std::vector<UnitFraction> terms = entry.terms;
                for (auto& term : terms) term.den = ring.conj(ring.mul(u, term.den));
                return Decomposition{std::move(terms), tags::kSpecialTable};
            }
        }
    }
    return std::nullopt;
}

Decomposition decompose(const Ring& ring, const QuadInt& n) { return decompose_impl(ring, n, 0); }

Decomposition pad_to_three(const Ring& ring, const Decomposition& dec) {
    Decomposition out = dec;
    while (out.terms.size() < 3) {
        UnitFraction last = out.terms.back();
        out.terms.pop_back();
        QuadInt twice = ring.mul(QuadInt{2, 0}, last.den);
        out.terms.push_back({last.sign, twice});
        out.terms.push_back({last.sign, twice});
    }
    return out;
}

}  // namespace quadfrac
