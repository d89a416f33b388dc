#include "quadfrac/ring.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <sstream>

namespace quadfrac {

namespace {

constexpr std::array<long, 21> kNormEuclideanD = {
    -11, -7, -3, -2, -1, 2, 3, 5, 6, 7, 11, 13, 17, 19, 21, 29, 33, 37, 41, 57, 73};

bool in_norm_euclidean_list(long d) {
    return std::find(kNormEuclideanD.begin(), kNormEuclideanD.end(), d) != kNormEuclideanD.end();
}

}  // namespace

Ring::Ring(long d) : d_(d) {
    if (d == 0 || d == 1) fail(ErrorKind::InvalidRing, "d must be a squarefree integer other than 0 and 1");
    if (!is_squarefree(Integer(d))) {
        fail(ErrorKind::InvalidRing, "d = " + std::to_string(d) + " is not squarefree");
    }
    long m4 = ((d % 4) + 4) % 4;
    if (m4 == 1) {
        omega_kind_ = OmegaKind::HalfPlusSqrt;
        omega_sq_p_ = Integer(d - 1) / 4;
        omega_sq_q_ = 1;
        norm_t_ = 1;
        norm_u_ = Integer(1 - d) / 4;
    } else {
        // d = 2, 3 (mod 4): the ring of integers is Z[sqrt(d)].
        omega_kind_ = OmegaKind::Sqrt;
        omega_sq_p_ = d;
        omega_sq_q_ = 0;
        norm_t_ = 0;
        norm_u_ = -Integer(d);
    }
    norm_euclidean_ = in_norm_euclidean_list(d);

    const QuadInt one{1, 0}, w{0, 1};
    switch (d) {
        case -1:
            units_ = {one, -one, w, -w};
            two_divisors_ = {QuadInt{1, 1}};
            exceptional_norm_bound_ = 2;
            break;
        case -2:
            units_ = {one, -one};
            two_divisors_ = {w};
            exceptional_norm_bound_ = 3;
            break;
        case -3:
            units_ = {one, -one, w, -w, QuadInt{-1, 1}, QuadInt{1, -1}};
            two_is_prime_ = true;
            exceptional_norm_bound_ = 1;
            break;
        case -7:
            units_ = {one, -one};
            two_divisors_ = {w, QuadInt{1, -1}};
            exceptional_norm_bound_ = 2;
            break;
        case -11:
            units_ = {one, -one};
            two_is_prime_ = true;
            exceptional_norm_bound_ = 5;
            exceptional_exclusions_ = {QuadInt{2, 0}, QuadInt{-2, 0}};
            break;
        default:
            if (d < 0) units_ = {one, -one};
            break;
    }
}

Ring make_ring(long d) { return Ring(d); }

QuadInt Ring::mul(const QuadInt& x, const QuadInt& y) const {
    // (a+bw)(c+ew) = ac + (ae+bc)w + be*w^2, reduced via w^2 = p + qw
    Integer be = x.b * y.b;
    return {x.a * y.a + be * omega_sq_p_, x.a * y.b + x.b * y.a + be * omega_sq_q_};
}

QuadInt Ring::conj(const QuadInt& x) const {
    if (omega_kind_ == OmegaKind::Sqrt) return {x.a, -x.b};
    return {x.a + x.b, -x.b};
}

Integer Ring::norm(const QuadInt& x) const {
    return x.a * x.a + norm_t_ * x.a * x.b + norm_u_ * x.b * x.b;
}

Integer Ring::trace(const QuadInt& x) const {
    if (omega_kind_ == OmegaKind::Sqrt) return 2 * x.a;
    return 2 * x.a + x.b;
}

std::optional<QuadInt> Ring::div_exact(const QuadInt& x, const QuadInt& y) const {
    if (y.is_zero()) return std::nullopt;
    Integer n = norm(y);
    QuadInt num = mul(x, conj(y));
    if (num.a % n != 0 || num.b % n != 0) return std::nullopt;
    return QuadInt{num.a / n, num.b / n};
}

bool Ring::is_exceptional(const QuadInt& x) const {
    if (!has_exceptional_set()) return false;
    if (norm(x) > exceptional_norm_bound_) return false;
    for (const auto& e : exceptional_exclusions_)
        if (x == e) return false;
    return true;
}

std::vector<QuadInt> Ring::exceptional_set() const {
    std::vector<QuadInt> out;
    if (!has_exceptional_set()) return out;
    long bound = static_cast<long>(exceptional_norm_bound_);
    // Positive-definite form: |b| <= sqrt(bound / (u - t^2/4)), small here.
    for (long b = -bound; b <= bound; ++b) {
        for (long a = -2 * bound; a <= 2 * bound; ++a) {
            QuadInt x{a, b};
            if (is_exceptional(x) && norm(x) <= exceptional_norm_bound_) out.push_back(x);
        }
    }
    std::sort(out.begin(), out.end(), [this](const QuadInt& x, const QuadInt& y) {
        Integer nx = norm(x), ny = norm(y);
        if (nx != ny) return nx < ny;
        return x < y;
    });
    return out;
}

DivModResult Ring::div_by_four(const QuadInt& n) const {
    auto reduce = [](const Integer& v) {
        Integer r = floor_mod(v, 4);  // in {0,1,2,3}
        if (r == 3) r = -1;           // canonical window {-1,0,1,2}
        return r;
    };
    QuadInt r{reduce(n.a), reduce(n.b)};
    return {QuadInt{(n.a - r.a) / 4, (n.b - r.b) / 4}, r};
}

DivModResult Ring::euclid_divmod(const QuadInt& x, const QuadInt& n) const {
    if (n.is_zero()) fail(ErrorKind::DivisionByZero, "euclid_divmod: divisor is zero");
    if (!norm_euclidean_) {
        fail(ErrorKind::Unsupported, "euclid_divmod: ring d=" + std::to_string(d_) + " is not norm-Euclidean");
    }
    Integer nn = norm(n);
    QuadInt num = mul(x, conj(n));  // x/n = num / nn
    QuadInt q{round_half_down(num.a, nn), round_half_down(num.b, nn)};
    QuadInt r = x - mul(n, q);
    Integer absN = nn < 0 ? Integer(-nn) : nn;
    auto abs_norm = [&](const QuadInt& v) {
        Integer t = norm(v);
        return t < 0 ? Integer(-t) : t;
    };
    if (abs_norm(r) < absN) return {q, r};
    // Indefinite norms (positive d): the rounded lattice point need not
    // witness the Euclidean property. The residue x/n - q lies in the unit
    // box, so the witness offset is bounded by a constant depending only on
    // d; search expanding rings deterministically.
    for (long rad = 1; rad <= 64; ++rad) {
        for (long da = -rad; da <= rad; ++da) {
            for (long db = -rad; db <= rad; ++db) {
                if (std::max(da < 0 ? -da : da, db < 0 ? -db : db) != rad) continue;
                QuadInt cq{q.a + da, q.b + db};
                QuadInt cr = x - mul(n, cq);
                if (abs_norm(cr) < absN) return {cq, cr};
            }
        }
    }
    fail(ErrorKind::Unsupported, "euclid_divmod: no remainder of smaller norm found");
}

IntRemResult Ring::int_rem_divmod(const QuadInt& x, const QuadInt& n) const {
    Integer nn = norm(n);
    if (nn < 0) nn = -nn;
    if (nn % 2 == 0) fail(ErrorKind::OutOfDomain, "int_rem_divmod: N(n) must be odd");
    if (nn == 1) fail(ErrorKind::OutOfDomain, "int_rem_divmod: N(n) must not be 1");
    Integer s, t;
    Integer g = ext_gcd(n.b, nn, s, t);
    if (g != 1) {
        fail(ErrorKind::OutOfDomain,
             "int_rem_divmod: omega-coordinate of n must be coprime to N(n)");
    }

    // Euclidean step, then cancel the omega-coordinate of the remainder with
    // the Bezout pair, then reduce the leftover rational part mod N(n) via
    // conj(n) adjustments.
    auto [q0, r0] = euclid_divmod(x, n);
    Integer alpha = r0.b;              // omega-coordinate to cancel
    Integer m = -alpha * s;            // r0 + m*n has omega-coordinate alpha*t*N
    QuadInt shifted = r0 + mul(n, QuadInt{m, 0});
    // shifted = rho + (alpha*t*N) * omega
    Integer rho = shifted.a;
    Integer mprime = floor_div(rho, nn);
    Integer r = rho - mprime * nn;
    QuadInt k{mprime, alpha * t};
    QuadInt q = q0 - QuadInt{m, 0} + mul(conj(n), k);
    // final window |r| <= (N-1)/2
    Integer half = (nn - 1) / 2;
    if (r > half) {
        r -= nn;
        q = q + conj(n);
    }
    if (x != mul(n, q) + QuadInt{r, 0} || r < -half || r > half) {
        fail(ErrorKind::InvariantViolation, "int_rem_divmod: reduction contract broke");
    }
    return {q, r};
}

std::vector<QuadInt> Ring::associates(const QuadInt& x) const {
    if (units_.empty()) {
        fail(ErrorKind::Unsupported, "associates: infinite unit group for d=" + std::to_string(d_));
    }
    std::vector<QuadInt> out;
    out.reserve(units_.size());
    for (const auto& u : units_) out.push_back(mul(u, x));
    return out;
}

std::pair<QuadInt, QuadInt> Ring::canonical_associate(const QuadInt& x) const {
    if (units_.empty()) {
        fail(ErrorKind::Unsupported, "canonical_associate: infinite unit group for d=" + std::to_string(d_));
    }
    QuadInt best = x, best_u{1, 0};
    bool first = true;
    for (const auto& u : units_) {
        QuadInt cand = mul(u, x);
        if (first || cand < best) {
            best = cand;
            best_u = u;
            first = false;
        }
    }
    return {best, best_u};
}

namespace {

struct Term {
    Integer coeff;
    bool has_w;
};

// one signed term: [+-]? (digits ('*'? 'w')? | 'w')
bool parse_term(const std::string& s, size_t& i, Term& out) {
    size_t n = s.size();
    Integer sign = 1;
    if (i < n && (s[i] == '+' || s[i] == '-')) {
        if (s[i] == '-') sign = -1;
        ++i;
    }
    std::string digits;
    while (i < n && std::isdigit(static_cast<unsigned char>(s[i]))) digits.push_back(s[i++]);
    bool has_w = false;
    if (i < n && (s[i] == '*' || s[i] == 'w')) {
        if (s[i] == '*') {
            if (digits.empty()) return false;
            ++i;
            if (i >= n || s[i] != 'w') return false;
        }
        if (i < n && s[i] == 'w') {
            has_w = true;
            ++i;
        }
    }
    if (digits.empty() && !has_w) return false;
    Integer coeff = digits.empty() ? Integer(1) : Integer(digits);
    out = {sign * coeff, has_w};
    return true;
}

}  // namespace

QuadInt parse_element(const std::string& text) {
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
    if (s.empty()) fail(ErrorKind::ParseError, "empty element text");

    size_t i = 0;
    QuadInt out{0, 0};
    bool seen_plain = false, seen_w = false;
    int terms = 0;
    while (i < s.size()) {
        if (terms == 2) fail(ErrorKind::ParseError, "too many terms in element text: " + text);
        if (terms == 1 && s[i] != '+' && s[i] != '-') {
            fail(ErrorKind::ParseError, "expected sign between terms: " + text);
        }
        Term t;
        if (!parse_term(s, i, t)) fail(ErrorKind::ParseError, "cannot parse element text: " + text);
        if (t.has_w) {
            if (seen_w) fail(ErrorKind::ParseError, "duplicate w term: " + text);
            seen_w = true;
            out.b = t.coeff;
        } else {
            if (seen_plain) fail(ErrorKind::ParseError, "duplicate integer term: " + text);
            seen_plain = true;
            out.a = t.coeff;
        }
        ++terms;
    }
    return out;
}

std::string format_element(const QuadInt& x) {
    std::ostringstream os;
    if (x.b == 0) {
        os << x.a;
        return os.str();
    }
    if (x.a != 0) {
        os << x.a;
        os << (x.b > 0 ? "+" : "-");
        Integer mag = x.b > 0 ? x.b : Integer(-x.b);
        if (mag != 1) os << mag << "*";
        os << "w";
        return os.str();
    }
    if (x.b == 1) return "w";
    if (x.b == -1) return "-w";
    os << x.b << "*w";
    return os.str();
}

}  // namespace quadfrac
