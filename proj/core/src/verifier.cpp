#include "quadfrac/verifier.hpp"

#include "quadfrac/error.hpp"

namespace quadfrac {

bool verify(const Ring& ring, const QuadInt& n, const Decomposition& dec) {
    if (n.is_zero()) fail(ErrorKind::OutOfDomain, "verify: n must be nonzero");
    if (dec.terms.empty() || dec.terms.size() > 3) {
        fail(ErrorKind::Malformed, "verify: decomposition must have 1-3 terms");
    }
    for (const auto& t : dec.terms) {
        if (t.den.is_zero()) fail(ErrorKind::Malformed, "verify: zero denominator");
    }
    QuadInt prod{1, 0};
    for (const auto& t : dec.terms) prod = ring.mul(prod, t.den);
    QuadInt rhs{0, 0};
    for (size_t i = 0; i < dec.terms.size(); ++i) {
        QuadInt partial{1, 0};
        for (size_t j = 0; j < dec.terms.size(); ++j) {
            if (j != i) partial = ring.mul(partial, dec.terms[j].den);
        }
        if (dec.terms[i].sign >= 0) {
            rhs = rhs + partial;
        } else {
            rhs = rhs - partial;
        }
    }
    return ring.mul(QuadInt{4, 0}, prod) == ring.mul(n, rhs);
}

bool in_cone(const QuadInt& x) {
    return (x.a >= 0 && x.b >= 0) || (x.a <= 0 && x.b <= 0);
}

ConeReport check_conjecture(const Ring& ring, const QuadInt& n, const Decomposition& dec) {
    if (ring.d() != -1) fail(ErrorKind::Unsupported, "check_conjecture: ring must be d=-1");
    ConeReport rep;
    rep.n = n;
    bool excluded = n == QuadInt{0, 0} || n == QuadInt{1, 0} || n == QuadInt{0, 1} || n == QuadInt{1, 1};
    rep.in_domain = n.a >= 0 && n.b >= 0 && !excluded;
    rep.terms_ok = true;
    for (const auto& t : dec.terms) {
        if (!in_cone(t.den)) rep.terms_ok = false;
    }
    rep.sum_ok = verify(ring, n, dec);
    return rep;
}

}  // namespace quadfrac
