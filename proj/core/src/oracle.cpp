#include "quadfrac/oracle.hpp"

#include <algorithm>
#include <map>
#include <thread>

#include "quadfrac/engine.hpp"
#include "quadfrac/error.hpp"
#include "quadfrac/rational.hpp"
#include "quadfrac/verifier.hpp"

namespace quadfrac {

namespace {

bool norm_lex_less(const Ring& ring, const QuadInt& x, const QuadInt& y) {
    Integer nx = ring.norm(x), ny = ring.norm(y);
    if (nx != ny) return nx < ny;
    return x < y;
}

void sort_points(const Ring& ring, std::vector<QuadInt>& pts) {
    std::sort(pts.begin(), pts.end(),
              [&](const QuadInt& x, const QuadInt& y) { return norm_lex_less(ring, x, y); });
}

}  // namespace

std::vector<QuadInt> lattice_points(const Ring& ring, const Integer& norm_bound) {
    if (ring.d() >= 0) fail(ErrorKind::Unsupported, "lattice_points: needs a definite norm form");
    std::vector<QuadInt> out;
    // N = (a + t*b/2)^2 + (u - t^2/4) b^2, so b is bounded by sqrt(B / (u - t^2/4)).
    Integer t = ring.norm_t(), u = ring.norm_u();
    Integer four_disc = 4 * u - t * t;  // > 0 for negative d
    Integer bmax = isqrt(4 * norm_bound / four_disc) + 1;
    for (Integer b = -bmax; b <= bmax; ++b) {
        // a^2 + t*b*a + (u*b^2 - B) <= 0
        Integer tb = t * b;
        Integer disc = tb * tb - 4 * (u * b * b - norm_bound);
        if (disc < 0) continue;
        Integer root = isqrt(disc);
        Integer lo = floor_div(-tb - root, 2);
        Integer hi = floor_div(-tb + root, 2) + 1;
        for (Integer a = lo; a <= hi; ++a) {
            QuadInt x{a, b};
            Integer nx = ring.norm(x);
            if (nx >= 1 && nx <= norm_bound) out.push_back(x);
        }
    }
    sort_points(ring, out);
    return out;
}

namespace {

// Points of exact norm v, lex order on (a, b). Enumeration stays lazy so the
// denominator bound only gates the exactly-solved last slot, never a sweep.
std::vector<QuadInt> norm_shell(const Ring& ring, const Integer& v) {
    std::vector<QuadInt> out;
    Integer t = ring.norm_t(), u = ring.norm_u();
    Integer four_disc = 4 * u - t * t;
    Integer bmax = isqrt(4 * v / four_disc) + 1;
    for (Integer b = -bmax; b <= bmax; ++b) {
        Integer tb = t * b;
        Integer disc = tb * tb - 4 * (u * b * b - v);
        if (disc < 0) continue;
        Integer root = isqrt(disc);
        if (root * root != disc) continue;
        Integer lo = -tb - root, hi = -tb + root;
        for (int which = 0; which < (root == 0 ? 1 : 2); ++which) {
            const Integer& num = which == 0 ? lo : hi;
            if (floor_mod(num, 2) != 0) continue;
            QuadInt x{num / 2, b};
            if (ring.norm(x) == v) out.push_back(x);
        }
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end(),
                          [](const QuadInt& x, const QuadInt& y) { return x == y; }),
              out.end());
    return out;
}

struct Searcher {
    const Ring& ring;
    const BruteForceOptions& opts;
    std::vector<Decomposition>& results;
    std::map<Integer, std::vector<QuadInt>> shell_cache;

    const std::vector<QuadInt>& shell(const Integer& v) {
        auto it = shell_cache.find(v);
        if (it == shell_cache.end()) it = shell_cache.emplace(v, norm_shell(ring, v)).first;
        return it->second;
    }

    bool full() const { return static_cast<int>(results.size()) >= opts.max_results; }

    bool admissible(const QuadInt& den) const {
        if (opts.cone_only && !in_cone(den)) return false;
        return true;
    }

    // residual = sum of the remaining `slots` unit fractions; chosen is kept
    // nondecreasing in (norm, a, b) so each multiset appears once.
    void search(const QuadRat& residual, std::vector<QuadInt>& chosen, int slots) {
        if (full()) return;
        if (slots == 1) {
            // exact solve: den = residual.den / residual.num
            if (residual.is_zero()) return;
            auto den = ring.div_exact(residual.den, residual.num);
            if (!den || den->is_zero()) return;
            if (ring.norm(*den) > opts.den_norm_bound) return;
            if (!admissible(*den)) return;
            if (!chosen.empty() && norm_lex_less(ring, *den, chosen.back())) return;
            std::vector<UnitFraction> terms;
            for (const auto& c : chosen) terms.push_back({+1, c});
            terms.push_back({+1, *den});
            results.push_back({std::move(terms), tags::kBruteForce});
            return;
        }
        // |residual| <= slots / |den| for the smallest remaining denominator:
        // N(den) <= slots^2 * N(res.den) / N(res.num).
        Integer num_norm = ring.norm(residual.num);
        Integer den_norm = ring.norm(residual.den);
        Integer cap = opts.den_norm_bound;
        if (num_norm > 0) {
            Integer feas = Integer(slots) * Integer(slots) * den_norm / num_norm;
            if (feas < cap) cap = feas;
        }
        Integer start_norm = chosen.empty() ? Integer(1) : ring.norm(chosen.back());
        for (Integer v = start_norm; v <= cap; ++v) {
            if (full()) return;
            for (const QuadInt& cand : shell(v)) {
                if (full()) return;
                if (!chosen.empty() && v == start_norm && cand < chosen.back()) continue;
                if (!admissible(cand)) continue;
                QuadRat next = rat_sub(ring, residual, QuadRat{QuadInt{1, 0}, cand});
                chosen.push_back(cand);
                search(next, chosen, slots - 1);
                chosen.pop_back();
            }
        }
    }
};

}  // namespace

std::vector<Decomposition> brute_force(const Ring& ring, const QuadInt& n,
                                       const BruteForceOptions& opts) {
    if (n.is_zero()) fail(ErrorKind::OutOfDomain, "brute_force: n must be nonzero");
    if (opts.cone_only && ring.d() != -1) {
        fail(ErrorKind::Unsupported, "brute_force: cone_only is defined for d = -1 only");
    }
    if (opts.term_count < 1 || opts.term_count > 3) {
        fail(ErrorKind::OutOfDomain, "brute_force: term_count must be 1..3");
    }
    if (ring.d() >= 0) fail(ErrorKind::Unsupported, "brute_force: needs a definite norm form");
    std::vector<Decomposition> results;
    Searcher searcher{ring, opts, results};
    std::vector<QuadInt> chosen;
    searcher.search(QuadRat{QuadInt{4, 0}, n}, chosen, opts.term_count);
    for (const auto& dec : results) {
        if (!verify(ring, n, dec)) {
            fail(ErrorKind::InvariantViolation, "brute_force: unverified hit");
        }
    }
    return results;
}

namespace {

int clamp_jobs(int jobs, size_t work_items) {
    if (jobs < 1) jobs = 1;
    if (static_cast<size_t>(jobs) > work_items && work_items > 0) jobs = static_cast<int>(work_items);
    return jobs;
}

template <typename Fn>
void parallel_over(const std::vector<QuadInt>& items, int jobs, Fn&& per_shard) {
    jobs = clamp_jobs(jobs, items.size());
    if (jobs <= 1) {
        per_shard(0, items.size(), 0);
        return;
    }
    std::vector<std::thread> pool;
    size_t chunk = (items.size() + jobs - 1) / jobs;
    for (int j = 0; j < jobs; ++j) {
        size_t lo = j * chunk;
        size_t hi = std::min(items.size(), lo + chunk);
        if (lo >= hi) break;
        pool.emplace_back([&, lo, hi, j] { per_shard(lo, hi, j); });
    }
    for (auto& th : pool) th.join();
}

}  // namespace

ScanReport scan_theorem(const Ring& ring, const Integer& norm_bound, int jobs) {
    if (!ring.has_exceptional_set()) {
        fail(ErrorKind::Unsupported, "scan_theorem: d must be in {-1,-2,-3,-7,-11}");
    }
    std::vector<QuadInt> points = lattice_points(ring, norm_bound);
    ScanReport rep;
    rep.d = ring.d();
    rep.norm_bound = norm_bound;
    rep.attempted = static_cast<long>(points.size());

    jobs = clamp_jobs(jobs, points.size());
    std::vector<long> decomposed(jobs, 0);
    std::vector<std::vector<QuadInt>> failures(jobs), exceptional(jobs);
    parallel_over(points, jobs, [&](size_t lo, size_t hi, int shard) {
        for (size_t i = lo; i < hi; ++i) {
            const QuadInt& n = points[i];
            if (ring.is_exceptional(n)) {
                exceptional[shard].push_back(n);
                continue;
            }
            try {
                Decomposition dec = decompose(ring, n);
                if (verify(ring, n, dec)) {
                    ++decomposed[shard];
                } else {
                    failures[shard].push_back(n);
                }
            } catch (const Error&) {
                failures[shard].push_back(n);
            }
        }
    });
    for (int j = 0; j < jobs; ++j) {
        rep.decomposed += decomposed[j];
        rep.failures.insert(rep.failures.end(), failures[j].begin(), failures[j].end());
        rep.exceptional_hits.insert(rep.exceptional_hits.end(), exceptional[j].begin(),
                                    exceptional[j].end());
    }
    sort_points(ring, rep.failures);
    sort_points(ring, rep.exceptional_hits);
    return rep;
}

ScanReport scan_conjecture(const Integer& norm_bound, const Integer& den_norm_bound, int jobs) {
    Ring ring = make_ring(-1);
    std::vector<QuadInt> points;
    for (const auto& p : lattice_points(ring, norm_bound)) {
        if (p.a >= 0 && p.b >= 0) points.push_back(p);
    }
    ScanReport rep;
    rep.d = -1;
    rep.norm_bound = norm_bound;
    rep.den_norm_bound = den_norm_bound;
    rep.attempted = static_cast<long>(points.size());

    jobs = clamp_jobs(jobs, points.size());
    std::vector<long> decomposed(jobs, 0);
    std::vector<std::vector<QuadInt>> failures(jobs), exceptional(jobs);
    parallel_over(points, jobs, [&](size_t lo, size_t hi, int shard) {
        BruteForceOptions opts;
        opts.term_count = 3;
        opts.den_norm_bound = den_norm_bound;
        opts.cone_only = true;
        opts.max_results = 1;
        for (size_t i = lo; i < hi; ++i) {
            const QuadInt& n = points[i];
            if (n == QuadInt{1, 0} || n == QuadInt{0, 1} || n == QuadInt{1, 1}) {
                exceptional[shard].push_back(n);
                continue;
            }
            auto hits = brute_force(ring, n, opts);
            if (hits.empty()) {
                failures[shard].push_back(n);  // open instance, reported verbatim
            } else {
                ++decomposed[shard];
            }
        }
    });
    for (int j = 0; j < jobs; ++j) {
        rep.decomposed += decomposed[j];
        rep.failures.insert(rep.failures.end(), failures[j].begin(), failures[j].end());
        rep.exceptional_hits.insert(rep.exceptional_hits.end(), exceptional[j].begin(),
                                    exceptional[j].end());
    }
    sort_points(ring, rep.failures);
    sort_points(ring, rep.exceptional_hits);
    return rep;
}

}  // namespace quadfrac
