// estarlab — families, closures and continuity for bioperations on
// e*-open sets, plus the claim registry and the full verification run.
//
// Exit codes: 0 ok, 1 hard failure, 2 usage/input error.

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "estarlab/claims.hpp"
#include "estarlab/errors.hpp"
#include "estarlab/verify.hpp"
#include "estarlab/workspace.hpp"

using namespace estarlab;
using nlohmann::json;

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) fail(Errc::parse_error, "cannot read file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::vector<std::string> split_names(const std::string& csv) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : csv) {
        if (c == ',') {
            if (!cur.empty()) out.push_back(cur);
            cur.clear();
        } else if (!isspace(static_cast<unsigned char>(c))) {
            cur += c;
        }
    }
    if (!cur.empty()) out.push_back(cur);
    return out;
}

const OperationPtr& named_op(const Workspace& w, const std::string& name) {
    auto it = w.operations.find(name);
    if (it == w.operations.end()) fail(Errc::parse_error, "unknown operation name: " + name);
    return it->second;
}

json masks_to_json(const FiniteSpace& sp, const std::vector<Mask>& masks) {
    json out = json::array();
    for (Mask m : masks) {
        json s = json::array();
        for (int i = 0; i < sp.point_count(); ++i)
            if (has_point(m, i)) s.push_back(sp.points()[i]);
        out.push_back(s);
    }
    return out;
}

std::string bracket_set(const FiniteSpace& sp, Mask m) {
    std::string out = "[";
    bool first = true;
    for (int i = 0; i < sp.point_count(); ++i) {
        if (!has_point(m, i)) continue;
        if (!first) out += ",";
        out += sp.points()[i];
        first = false;
    }
    return out + "]";
}

CorpusSpec corpus_for(const std::string& name, std::uint64_t seed) {
    CorpusSpec spec;
    spec.seed = seed;
    if (name == "n4")
        spec.max_points = 4;
    else if (name == "n3")
        spec.max_points = 3;
    else
        fail(Errc::parse_error, "unknown corpus name: " + name + " (expected n3 or n4)");
    return spec;
}

void print_claim_report(const ClaimReport& r, bool as_json) {
    if (as_json) {
        std::cout << claim_report_to_json(r).dump(2) << "\n";
        return;
    }
    std::cout << r.id << " [" << (r.kind == ClaimKind::hard_invariant ? "hard" : "paper")
              << "]: " << (r.all_hold ? "all-hold" : "counterexample") << " ("
              << r.non_vacuous << "/" << r.tested << " non-vacuous)\n";
    std::cout << "  " << r.statement << "\n";
    if (r.witness) {
        std::cout << "  witness: " << r.witness->detail << "\n";
        std::cout << "  from:    " << r.witness->provenance << "\n";
    }
    if (r.minimized) {
        std::cout << "  minimized: " << r.minimized->detail << "\n";
        std::cout << "  from:      " << r.minimized->provenance << "\n";
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"finite-space laboratory for bioperations on e*-open families"};
    app.require_subcommand(1);

    std::string doc_path, cod_doc_path, gamma_name, gamma_prime_name;
    std::string set_csv, which = "pointwise", kind = "estar", fn_name, ops_csv;
    std::string claim_id, corpus_name = "n3", json_path;
    std::uint64_t seed = 42;
    bool as_json = false, strict_def41 = false, run_all = false, no_shrink = false;

    auto add_doc = [&](CLI::App* cmd) {
        cmd->add_option("--doc", doc_path, "workspace document (JSON)")->required();
    };

    auto* families = app.add_subcommand("families", "list a derived family of subsets");
    add_doc(families);
    families->add_option("--kind", kind, "estar | biopen | single | classic");
    families->add_option("--gamma", gamma_name, "operation name");
    families->add_option("--gamma-prime", gamma_prime_name, "operation name");
    families->add_flag("--json", as_json);

    auto* closure = app.add_subcommand("closure", "closure/interior of one subset");
    add_doc(closure);
    closure->add_option("--set", set_csv, "comma-separated point names (empty = {})");
    closure->add_option("--which", which, "pointwise | lattice | estar | interior");
    closure->add_option("--gamma", gamma_name);
    closure->add_option("--gamma-prime", gamma_prime_name);
    closure->add_flag("--json", as_json);

    auto* interior = app.add_subcommand("interior", "bi-operation interior of one subset");
    add_doc(interior);
    interior->add_option("--set", set_csv, "comma-separated point names (empty = {})");
    interior->add_option("--which", which, "biop | estar | plain")->default_str("biop");
    interior->add_option("--gamma", gamma_name);
    interior->add_option("--gamma-prime", gamma_prime_name);
    interior->add_flag("--json", as_json);

    auto* check = app.add_subcommand("check", "run one registered claim on the corpus");
    check->add_option("claim", claim_id, "claim id, e.g. C-P3.2");
    check->add_flag("--list", run_all, "list all claim ids instead");
    check->add_option("--corpus", corpus_name, "n3 | n4");
    check->add_option("--seed", seed);
    check->add_flag("--no-shrink", no_shrink);
    check->add_flag("--json", as_json);

    auto* search = app.add_subcommand("search",
                                      "hunt for counterexamples across the registry");
    search->add_option("--claim", claim_id, "restrict to one claim id");
    search->add_option("--corpus", corpus_name, "n3 | n4");
    search->add_option("--seed", seed);
    search->add_flag("--json", as_json);

    auto* continuity = app.add_subcommand("continuity", "evaluate the seven conditions");
    add_doc(continuity);
    continuity->add_option("--codomain-doc", cod_doc_path, "codomain document (defaults to --doc)");
    continuity->add_option("--fn", fn_name)->required();
    continuity->add_option("--ops", ops_csv, "gamma,gamma',beta,beta'")->required();
    continuity->add_flag("--strict-def41", strict_def41, "literal reading of the definition");
    continuity->add_flag("--json", as_json);

    auto* closed_map = app.add_subcommand("closed-map", "test the bi-closed map property");
    add_doc(closed_map);
    closed_map->add_option("--codomain-doc", cod_doc_path);
    closed_map->add_option("--fn", fn_name)->required();
    closed_map->add_option("--ops", ops_csv, "gamma,gamma',beta,beta'")->required();
    closed_map->add_flag("--json", as_json);

    auto* verify = app.add_subcommand("verify-paper",
                                      "golden examples + the whole claim registry");
    verify->add_option("--corpus", corpus_name, "n3 | n4");
    verify->add_option("--seed", seed);
    verify->add_option("--json", json_path, "write the machine-readable report here");

    CLI11_PARSE(app, argc, argv);

    try {
        if (families->parsed()) {
            Workspace w = parse_workspace(read_file(doc_path));
            const FiniteSpace& sp = *w.space;
            std::vector<Mask> members;
            if (kind == "estar") {
                members = sp.estar_opens().members();
            } else if (kind == "single") {
                members = single_op_open_family(*named_op(w, gamma_name)).members();
            } else if (kind == "biopen" || kind == "classic") {
                auto ctx = make_context(named_op(w, gamma_name), named_op(w, gamma_prime_name));
                if (kind == "biopen") {
                    members = ctx->biopen_family().members();
                } else {
                    for (Mask a = 0; a <= sp.universe(); ++a)
                        if (ctx->is_classic_biopen(a)) members.push_back(a);
                }
            } else {
                fail(Errc::parse_error, "unknown family kind: " + kind);
            }
            if (as_json) {
                std::cout << json({{"kind", kind}, {"members", masks_to_json(sp, members)}}).dump(2)
                          << "\n";
            } else {
                for (Mask m : members) std::cout << bracket_set(sp, m) << "\n";
            }
            return 0;
        }

        if (closure->parsed() || interior->parsed()) {
            Workspace w = parse_workspace(read_file(doc_path));
            const FiniteSpace& sp = *w.space;
            const Mask a = sp.mask_of(split_names(set_csv));
            Mask result = 0;
            std::string what;
            const bool want_interior = interior->parsed();
            if (want_interior && which == "pointwise") which = "biop";
            if (which == "estar") {
                result = want_interior ? sp.estar_interior(a) : sp.estar_closure(a);
                what = want_interior ? "e*Int" : "e*Cl";
            } else if (which == "plain" && want_interior) {
                result = sp.interior(a);
                what = "Int";
            } else {
                auto ctx = make_context(named_op(w, gamma_name), named_op(w, gamma_prime_name));
                if (want_interior || which == "interior") {
                    result = ctx->interior(a);
                    what = "biop-Int";
                } else if (which == "pointwise") {
                    result = ctx->closure_pointwise(a);
                    what = "pointwise-Cl";
                } else if (which == "lattice") {
                    result = ctx->closure_lattice(a);
                    what = "lattice-Cl";
                } else {
                    fail(Errc::parse_error, "unknown --which value: " + which);
                }
            }
            if (as_json)
                std::cout << json({{"which", what},
                                   {"set", masks_to_json(sp, {a})[0]},
                                   {"result", masks_to_json(sp, {result})[0]}})
                                 .dump(2)
                          << "\n";
            else
                std::cout << what << "(" << bracket_set(sp, a) << ") = " << bracket_set(sp, result)
                          << "\n";
            return 0;
        }

        if (check->parsed()) {
            if (run_all) {
                for (const Claim& c : claim_registry())
                    std::cout << c.id << "  ["
                              << (c.kind == ClaimKind::hard_invariant ? "hard" : "paper")
                              << "]  " << c.statement << "\n";
                return 0;
            }
            if (claim_id.empty()) fail(Errc::unknown_claim, "no claim id given (try --list)");
            const Claim& c = find_claim(claim_id);
            const Corpus corpus = build_standard_corpus(corpus_for(corpus_name, seed));
            RunOptions opts;
            opts.shrink = !no_shrink;
            const ClaimReport r = run_claim(c, corpus, opts);
            print_claim_report(r, as_json);
            return (!r.all_hold && r.kind == ClaimKind::hard_invariant) ? 1 : 0;
        }

        if (search->parsed()) {
            const Corpus corpus = build_standard_corpus(corpus_for(corpus_name, seed));
            json out = json::array();
            bool printed = false;
            for (const Claim& c : claim_registry()) {
                if (!claim_id.empty() && c.id != claim_id) continue;
                const ClaimReport r = run_claim(c, corpus, {});
                if (as_json) {
                    out.push_back(claim_report_to_json(r));
                } else if (!r.all_hold) {
                    print_claim_report(r, false);
                    printed = true;
                }
            }
            if (as_json)
                std::cout << out.dump(2) << "\n";
            else if (!printed)
                std::cout << "no counterexamples found\n";
            return 0;
        }

        if (continuity->parsed() || closed_map->parsed()) {
            Workspace dom = parse_workspace(read_file(doc_path));
            Workspace cod =
                cod_doc_path.empty() ? dom : parse_workspace(read_file(cod_doc_path));
            const auto ops = split_names(ops_csv);
            if (ops.size() != 4)
                fail(Errc::parse_error, "--ops expects gamma,gamma',beta,beta'");
            auto dom_ctx = make_context(named_op(dom, ops[0]), named_op(dom, ops[1]));
            auto cod_ctx = make_context(named_op(cod, ops[2]), named_op(cod, ops[3]));
            const FiniteFunction f = resolve_function(dom, fn_name, cod.space);

            if (closed_map->parsed()) {
                ClosedMapWitness w;
                const bool closed = is_bi_closed_map(f, *dom_ctx, *cod_ctx, &w);
                if (as_json) {
                    json j = {{"closed", closed}};
                    if (!closed) j["witness"] = masks_to_json(f.domain(), {w.set})[0];
                    std::cout << j.dump(2) << "\n";
                } else {
                    std::cout << "bi-closed: " << (closed ? "true" : "false") << "\n";
                    if (!closed)
                        std::cout << "witness: image of " << bracket_set(f.domain(), w.set)
                                  << " is not bi-closed\n";
                }
                return 0;
            }

            const auto reading = strict_def41 ? Def41Reading::strict : Def41Reading::resolved;
            const auto v = continuity_conditions(f, *dom_ctx, *cod_ctx, reading);
            if (as_json) {
                json j;
                for (int i = 1; i <= 7; ++i) {
                    json cj = {{"holds", v.c(i)}};
                    if (v.witness[i - 1]) cj["witness"] = v.witness[i - 1]->detail;
                    j["c" + std::to_string(i)] = cj;
                }
                j["def41_reading"] = strict_def41 ? "strict" : "gamma-prime";
                std::cout << j.dump(2) << "\n";
            } else {
                static const char* names[7] = {
                    "bi-continuity",          "pointwise closures under images",
                    "pointwise closures under preimages", "preimages of bi-closed sets",
                    "lattice closures under images",      "preimages of bi-open sets",
                    "bi-open neighbourhood refinement"};
                for (int i = 1; i <= 7; ++i) {
                    std::cout << "c" << i << " " << names[i - 1] << ": "
                              << (v.c(i) ? "true" : "false") << "\n";
                    if (v.witness[i - 1])
                        std::cout << "   witness: " << v.witness[i - 1]->detail << "\n";
                }
                std::cout << "def-4.1 reading: " << (strict_def41 ? "strict" : "gamma-prime")
                          << "\n";
            }
            return 0;
        }

        if (verify->parsed()) {
            VerifyOptions opts;
            opts.corpus = corpus_for(corpus_name, seed);
            const VerifyResult result = verify_paper(opts);
            std::cout << result.human();
            if (!json_path.empty()) {
                std::ofstream out(json_path, std::ios::binary);
                if (!out) fail(Errc::parse_error, "cannot write " + json_path);
                out << result.to_json().dump(2) << "\n";
            }
            return result.exit_code;
        }
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
