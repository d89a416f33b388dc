#include "commands.hpp"

#include <cstdlib>
#include <ostream>

#include <json.hpp>

#include "quadfrac/engine.hpp"
#include "quadfrac/error.hpp"
#include "quadfrac/oracle.hpp"
#include "quadfrac/pell.hpp"
#include "quadfrac/verifier.hpp"

namespace quadfrac::cli {

namespace {

using nlohmann::json;

json terms_json(const std::vector<UnitFraction>& terms) {
    json arr = json::array();
    for (const auto& t : terms) {
        arr.push_back({{"sign", t.sign}, {"den", format_element(t.den)}});
    }
    return arr;
}

std::string pretty_terms(const std::vector<UnitFraction>& terms) {
    std::string s;
    for (size_t i = 0; i < terms.size(); ++i) {
        if (i == 0) {
            if (terms[i].sign < 0) s += "-";
        } else {
            s += terms[i].sign < 0 ? " - " : " + ";
        }
        s += "1/(" + format_element(terms[i].den) + ")";
    }
    return s;
}

// verified is recomputed at emission time, never copied from upstream.
json output_record(const Ring& ring, const QuadInt& input, const Decomposition& dec) {
    bool ok = verify(ring, input, dec);
    return json{{"schema_version", kSchemaVersion},
                {"ring_d", ring.d()},
                {"input", format_element(input)},
                {"terms", terms_json(dec.terms)},
                {"recipe_tag", dec.recipe_tag},
                {"verified", ok}};
}

int emit_record(std::ostream& out, const Ring& ring, const QuadInt& input, const Decomposition& dec,
                const CommonOptions& common) {
    json rec = output_record(ring, input, dec);
    if (common.pretty) {
        out << "4/(" << format_element(input) << ") = " << pretty_terms(dec.terms) << "   ["
            << dec.recipe_tag << ", " << (rec["verified"].get<bool>() ? "verified" : "UNVERIFIED")
            << "]\n";
    } else {
        out << rec.dump() << "\n";
    }
    return rec["verified"].get<bool>() ? 0 : 1;
}

int error_code(const Error& e, std::ostream& err) {
    err << "error: " << e.what() << "\n";
    return e.kind() == ErrorKind::Exceptional ? 2 : 1;
}

}  // namespace

int cmd_decompose(std::ostream& out, std::ostream& err, long d, const std::string& element,
                  bool pad_three, const CommonOptions& common) {
    try {
        Ring ring = make_ring(d);
        QuadInt n = parse_element(element);
        Decomposition dec = decompose(ring, n);
        if (pad_three) dec = pad_to_three(ring, dec);
        return emit_record(out, ring, n, dec, common);
    } catch (const Error& e) {
        return error_code(e, err);
    }
}

int cmd_verify(std::ostream& out, std::ostream& err, long d, const std::string& element,
               const std::vector<std::string>& term_texts, const CommonOptions& common) {
    try {
        Ring ring = make_ring(d);
        QuadInt n = parse_element(element);
        Decomposition dec;
        dec.recipe_tag = "user-supplied";
        for (const auto& t : term_texts) dec.terms.push_back({+1, parse_element(t)});
        bool ok = verify(ring, n, dec);
        if (common.pretty) {
            out << "4/(" << format_element(n) << ") == " << pretty_terms(dec.terms) << " : "
                << (ok ? "true" : "false") << "\n";
        } else {
            json rec{{"schema_version", kSchemaVersion},
                     {"ring_d", ring.d()},
                     {"input", format_element(n)},
                     {"terms", terms_json(dec.terms)},
                     {"verified", ok}};
            out << rec.dump() << "\n";
        }
        return ok ? 0 : 1;
    } catch (const Error& e) {
        return error_code(e, err);
    }
}

int cmd_pell(std::ostream& out, std::ostream& err, long d, int max_power,
             const std::string& max_coord, const CommonOptions& common) {
    try {
        PellBounds bounds;
        bounds.max_power = max_power;
        bounds.max_omega_coord = Integer(max_coord);
        Decomposition dec = pell_two_term(d, bounds);
        Ring ring = make_ring(d);
        return emit_record(out, ring, QuadInt{1, 0}, dec, common);
    } catch (const Error& e) {
        return error_code(e, err);
    }
}

int cmd_scan(std::ostream& out, std::ostream& err, long d, const std::string& norm_bound,
             bool conjecture, const std::string& den_bound, int jobs, const CommonOptions& common) {
    try {
        Integer bound(norm_bound);
        ScanReport rep;
        if (conjecture) {
            if (d != -1) fail(ErrorKind::Unsupported, "conjecture scan is defined for d = -1");
            rep = scan_conjecture(bound, Integer(den_bound), effective_jobs(jobs));
            if (common.pretty) {
                out << "conjecture scan d=-1, cone denominators, positive unit fractions only\n";
            } else {
                json header{{"schema_version", kSchemaVersion},
                            {"type", "header"},
                            {"mode", "conjecture"},
                            {"restriction", "cone denominators, positive unit fractions only"}};
                out << header.dump() << "\n";
            }
        } else {
            Ring ring = make_ring(d);
            rep = scan_theorem(ring, bound, effective_jobs(jobs));
        }
        auto emit_elements = [&](const char* type, const std::vector<QuadInt>& xs) {
            for (const auto& x : xs) {
                if (common.pretty) {
                    out << "  " << type << ": " << format_element(x) << "\n";
                } else {
                    json rec{{"schema_version", kSchemaVersion},
                             {"type", type},
                             {"ring_d", rep.d},
                             {"element", format_element(x)}};
                    out << rec.dump() << "\n";
                }
            }
        };
        emit_elements("exceptional", rep.exceptional_hits);
        emit_elements(conjecture ? "open-instance" : "failure", rep.failures);
        if (common.pretty) {
            out << "scan d=" << rep.d << " norm_bound=" << rep.norm_bound << ": attempted "
                << rep.attempted << ", decomposed " << rep.decomposed << ", failures "
                << rep.failures.size() << ", exceptional " << rep.exceptional_hits.size() << "\n";
        } else {
            json summary{{"schema_version", kSchemaVersion},
                         {"type", "summary"},
                         {"ring_d", rep.d},
                         {"norm_bound", rep.norm_bound.str()},
                         {"attempted", rep.attempted},
                         {"decomposed", rep.decomposed},
                         {"failures", rep.failures.size()},
                         {"exceptional_hits", rep.exceptional_hits.size()}};
            if (conjecture) summary["den_norm_bound"] = rep.den_norm_bound.str();
            out << summary.dump() << "\n";
        }
        if (!conjecture && !rep.failures.empty()) return 1;
        return 0;
    } catch (const Error& e) {
        return error_code(e, err);
    }
}

int effective_jobs(int requested) {
    if (requested < 1) requested = 1;
    if (const char* cap = std::getenv("QUADFRAC_JOBS")) {
        int c = std::atoi(cap);
        if (c >= 1 && c < requested) requested = c;
    }
    return requested;
}

}  // namespace quadfrac::cli
