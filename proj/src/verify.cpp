#include "estarlab/verify.hpp"

#include <sstream>

#include "estarlab/examples.hpp"

namespace estarlab {

namespace {

using nlohmann::json;

struct GoldenCheck {
    std::string id;
    std::string description;
    std::string expected;
    std::string got;
    bool match;
};

void add_golden(std::vector<GoldenResult>& out, std::string id, std::string description,
                std::string expected, std::string got) {
    GoldenResult g;
    g.id = std::move(id);
    g.description = std::move(description);
    g.expected = std::move(expected);
    g.got = std::move(got);
    g.match = g.expected == g.got;
    out.push_back(std::move(g));
}

std::string yn(bool b) { return b ? "true" : "false"; }

std::string family_string(const FiniteSpace& sp, const SetFamily& fam) {
    std::string out;
    for (Mask m : fam.members()) {
        if (!out.empty()) out += ", ";
        out += sp.set_name(m);
    }
    return out;
}

std::vector<GoldenResult> run_goldens() {
    std::vector<GoldenResult> out;

    {
        auto fx = examples::ex_3_1();
        const FiniteSpace& sp = *fx.space;
        add_golden(out, "example-3.1", "{w1,w2} and {w2,w3} bi-open, {w2} not",
                   "true/true/false",
                   yn(fx.ctx->is_biopen(sp.mask_of({"w1", "w2"}))) + "/" +
                       yn(fx.ctx->is_biopen(sp.mask_of({"w2", "w3"}))) + "/" +
                       yn(fx.ctx->is_biopen(sp.mask_of({"w2"}))));
    }
    {
        auto fx = examples::ex_3_3();
        add_golden(out, "example-3.3", "bi-open family is {}, {u1,u2}, X",
                   "{}, {u1,u2}, {u1,u2,u3}",
                   family_string(*fx.space, fx.ctx->biopen_family()));
    }
    {
        auto fx = examples::ex_3_1();
        const Mask w2 = fx.space->mask_of({"w2"});
        add_golden(out, "example-3.4", "{w2} e*-open yet not bi-open", "true/false",
                   yn(fx.space->is_estar_open(w2)) + "/" + yn(fx.ctx->is_biopen(w2)));
    }
    {
        auto fx = examples::ex_3_5();
        const Mask t2 = fx.space->mask_of({"t2"});
        add_golden(out, "example-3.5", "{t2} bi-open but not e*_gamma-open", "true/false",
                   yn(fx.ctx->is_biopen(t2)) + "/" +
                       yn(single_op_open_family(*fx.gamma).contains(t2)));
    }
    {
        auto fx = examples::ex_post_3_6();
        const Mask v12 = fx.space->mask_of({"v1", "v2"});
        add_golden(out, "example-post-3.6", "{v1,v2} bi-open but not classically bi-open",
                   "true/false",
                   yn(fx.ctx->is_biopen(v12)) + "/" + yn(fx.ctx->is_classic_biopen(v12)));
    }
    {
        auto fx = examples::ex_3_6();
        const FiniteSpace& sp = *fx.space;
        const Mask z1 = sp.mask_of({"z1"});
        const Mask pcl = fx.ctx->closure_pointwise(z1);
        add_golden(out, "example-3.6-pointwise", "pointwise closure of {z1}", "{z1,z3}",
                   sp.set_name(pcl));
        add_golden(out, "example-3.6-lattice", "lattice closure of {z1}", "{z1,z2,z3}",
                   sp.set_name(fx.ctx->closure_lattice(z1)));
        add_golden(out, "example-3.6-idempotence",
                   "pointwise closure of {z1} is not idempotent", "true",
                   yn(fx.ctx->closure_pointwise(pcl) != pcl));
        add_golden(out, "example-3.6-op-openness", "the closure operation is not e*-open",
                   "false", yn(is_estar_open_operation(*fx.gamma)));
    }
    {
        auto fx = examples::ex_4_1();
        const auto v = continuity_conditions(*fx.f, *fx.dom, *fx.cod);
        add_golden(out, "example-4.1", "condition (4) holds while (1) fails", "c4=true,c1=false",
                   "c4=" + yn(v.c(4)) + ",c1=" + yn(v.c(1)));
    }
    {
        auto fx = examples::ex_4_2();
        const auto v = continuity_conditions(*fx.f, *fx.dom, *fx.cod);
        add_golden(out, "example-4.2", "condition (6) holds while (1) fails", "c6=true,c1=false",
                   "c6=" + yn(v.c(6)) + ",c1=" + yn(v.c(1)));
        add_golden(out, "example-4.2-family", "domain bi-open family is {}, X",
                   "{}, {s1,s2,s3}", family_string(*fx.space, fx.dom->biopen_family()));
    }
    {
        // The published closure value for {w1} prints a symbol that is not a
        // point of the space; the checkable part is the single-operation
        // union bound it is compared against.
        auto fx = examples::ex_3_1();
        const FiniteSpace& sp = *fx.space;
        const Mask w1 = sp.mask_of({"w1"});
        const Mask bound =
            single_op_closure(*fx.gamma, w1) | single_op_closure(*fx.gamma_prime, w1);
        const Mask pcl = fx.ctx->closure_pointwise(w1);
        add_golden(out, "remark-3.7",
                   "e*Cl_gamma({w1}) | e*Cl_gamma'({w1}) = {w1,w2} and contains the "
                   "pointwise closure",
                   "{w1,w2}/true", sp.set_name(bound) + "/" + yn(subset_of(pcl, bound)));
    }

    return out;
}

json golden_to_json(const GoldenResult& g) {
    json j;
    j["id"] = g.id;
    j["description"] = g.description;
    j["expected"] = g.expected;
    j["got"] = g.got;
    j["status"] = g.match ? "match" : "mismatch";
    return j;
}

}  // namespace

json claim_report_to_json(const ClaimReport& report) {
    json j;
    j["claim_id"] = report.id;
    j["kind"] = report.kind == ClaimKind::hard_invariant ? "hard-invariant" : "paper-claim";
    j["statement"] = report.statement;
    j["tested"] = report.tested;
    j["non_vacuous"] = report.non_vacuous;
    j["verdict"] = report.all_hold ? "all-hold" : "counterexample";
    j["notes"] = json::array();
    if (report.witness) {
        j["witness"] = {{"detail", report.witness->detail},
                        {"provenance", report.witness->provenance}};
    }
    if (report.minimized) {
        j["minimized"] = {{"detail", report.minimized->detail},
                          {"provenance", report.minimized->provenance}};
    }
    return j;
}

VerifyResult verify_paper(const VerifyOptions& options) {
    VerifyResult result;

    result.goldens = run_goldens();

    const Corpus corpus = build_standard_corpus(options.corpus);
    for (const Claim& claim : claim_registry())
        result.claims.push_back(run_claim(claim, corpus, options.run));

    // Standing notes, always present.
    {
        auto fx = examples::ex_3_1();
        const FiniteSpace& sp = *fx.space;
        const Mask w1 = sp.mask_of({"w1"});
        json f;
        f["id"] = "note-remark-3.7";
        f["kind"] = "discrepancy-note";
        f["detail"] =
            "the published value for the pointwise closure of {w1} names a symbol that is "
            "not a point of the space; recomputed value recorded here";
        f["recomputed"] = sp.set_name(fx.ctx->closure_pointwise(w1));
        result.findings.push_back(f);
    }
    {
        json f;
        f["id"] = "note-def-4.1";
        f["kind"] = "resolution-note";
        f["detail"] =
            "the bi-continuity definition's domain image is read as f(U^gamma \xE2\x88\xA9 "
            "V^gamma'); the literal text repeats gamma on both factors and is available "
            "behind the strict flag";
        f["reading"] = options.reading == Def41Reading::resolved ? "gamma-prime" : "strict";
        result.findings.push_back(f);
    }

    for (const GoldenResult& g : result.goldens) {
        if (g.match) continue;
        json f;
        f["id"] = "golden-" + g.id;
        f["kind"] = "discrepancy";
        f["detail"] = "published value disagrees with the definitional recomputation";
        f["expected"] = g.expected;
        f["recomputed"] = g.got;
        result.findings.push_back(f);
    }

    bool hard_failure = false;
    for (const ClaimReport& r : result.claims) {
        if (r.all_hold) continue;
        if (r.kind == ClaimKind::hard_invariant) {
            hard_failure = true;
            continue;
        }
        json f;
        f["id"] = "claim-" + r.id;
        f["kind"] = "refuted-claim";
        f["detail"] = r.statement;
        f["witness"] = r.witness ? r.witness->detail : "";
        f["provenance"] = r.witness ? r.witness->provenance : "";
        if (r.minimized) {
            f["minimized"] = r.minimized->detail;
            f["minimized_provenance"] = r.minimized->provenance;
        }
        result.findings.push_back(f);
    }

    const bool goldens_match =
        std::all_of(result.goldens.begin(), result.goldens.end(),
                    [](const GoldenResult& g) { return g.match; });
    result.exit_code = (hard_failure || !goldens_match) ? 1 : 0;
    return result;
}

json VerifyResult::to_json() const {
    json j;
    j["goldens"] = json::array();
    for (const auto& g : goldens) j["goldens"].push_back(golden_to_json(g));
    j["claims"] = json::array();
    for (const auto& c : claims) j["claims"].push_back(claim_report_to_json(c));
    j["findings"] = findings;
    j["meta"] = {{"exit_code", exit_code}, {"format_version", 1}};
    return j;
}

std::string VerifyResult::human() const {
    std::ostringstream os;
    os << "=== golden examples ===\n";
    for (const auto& g : goldens) {
        os << (g.match ? "  [match]    " : "  [MISMATCH] ") << g.id << ": " << g.description
           << "\n";
        if (!g.match)
            os << "              expected " << g.expected << ", recomputed " << g.got << "\n";
    }
    os << "=== claims ===\n";
    for (const auto& c : claims) {
        os << "  [" << (c.all_hold ? "all-hold" : "counterexample") << "] " << c.id << " ("
           << (c.kind == ClaimKind::hard_invariant ? "hard" : "paper") << ", "
           << c.non_vacuous << "/" << c.tested << " non-vacuous)";
        os << "\n";
        if (c.witness) {
            os << "      witness: " << c.witness->detail << "\n";
            os << "      from:    " << c.witness->provenance << "\n";
        }
        if (c.minimized) {
            os << "      minimized: " << c.minimized->detail << "\n";
            os << "      from:      " << c.minimized->provenance << "\n";
        }
    }
    os << "=== findings ===\n";
    for (const auto& f : findings)
        os << "  " << f.value("id", "") << ": " << f.value("detail", "") << "\n";
    os << "exit code: " << exit_code << "\n";
    return os.str();
}

}  // namespace estarlab
