#include <array>

#include "estarlab/claims.hpp"
#include "estarlab/enumerate.hpp"
#include "estarlab/examples.hpp"
#include "estarlab/random_gen.hpp"

namespace estarlab {

namespace {

struct NamedSpec {
    const char* name;
    OperationSpec spec;
};

std::array<NamedSpec, 3> canonical_specs() {
    return {NamedSpec{"id", OperationSpec::identity()},
            NamedSpec{"X", OperationSpec::constant_x()},
            NamedSpec{"Cl", OperationSpec::closure_op()}};
}

OperationProfile profile_for(int j) {
    switch (j % 3) {
        case 0: return OperationProfile::table_uniform;
        case 1: return OperationProfile::piecewise;
        default: return OperationProfile::closure_biased;
    }
}

}  // namespace

Corpus build_standard_corpus(const CorpusSpec& spec) {
    Corpus corpus;
    corpus.spec = spec;

    std::vector<std::string> space_tags;
    for (int n = 1; n <= spec.max_points; ++n) {
        auto spaces = enumerate_topologies(n);
        for (std::size_t i = 0; i < spaces.size(); ++i) {
            corpus.spaces.push_back(spaces[i]);
            space_tags.push_back("exhaustive(n=" + std::to_string(n) +
                                 ",index=" + std::to_string(i) + ")");
        }
    }

    // Operation pairs: all canonical combinations, then seeded random pairs.
    std::uint64_t draw = 0;
    for (std::size_t s = 0; s < corpus.spaces.size(); ++s) {
        const SpacePtr& sp = corpus.spaces[s];
        const auto canon = canonical_specs();
        std::vector<std::pair<OperationPtr, std::string>> bound_canon;
        for (const auto& named : canon)
            bound_canon.emplace_back(bind_operation(sp, named.spec), named.name);

        for (const auto& [g, gname] : bound_canon)
            for (const auto& [gp, gpname] : bound_canon)
                corpus.op_pairs.push_back(
                    {make_context(g, gp), space_tags[s] + ";ops=canonical(" + std::string(gname) +
                                              "," + gpname + ")"});

        for (int j = 0; j < spec.random_pairs_per_space; ++j) {
            const OperationProfile prof = profile_for(j);
            const std::uint64_t d0 = draw++;
            const std::uint64_t d1 = draw++;
            auto g = bind_operation(sp, random_operation(*sp, spec.seed, d0, prof));
            auto gp = bind_operation(sp, random_operation(*sp, spec.seed, d1, prof));
            corpus.op_pairs.push_back(
                {make_context(g, gp),
                 space_tags[s] + ";ops=random(seed=" + std::to_string(spec.seed) + ",draws=" +
                     std::to_string(d0) + "/" + std::to_string(d1) + ",profile=" +
                     profile_name(prof) + ")"});
        }
    }

    // Reusable per-space context pool for morphisms/triples.
    auto context_at = [&](std::size_t space_idx, std::uint64_t k) -> BiopContextPtr {
        // Index into that space's op-pair block (canonical + random).
        const std::size_t per_space = 9 + static_cast<std::size_t>(spec.random_pairs_per_space);
        const std::size_t base = space_idx * per_space;
        return corpus.op_pairs[base + (k % per_space)].ctx;
    };

    // Canonical morphisms: identity maps under a few context combinations,
    // plus the two worked map fixtures.
    for (std::size_t s = 0; s < corpus.spaces.size(); ++s) {
        const SpacePtr& sp = corpus.spaces[s];
        auto ident = std::make_shared<const FiniteFunction>(FiniteFunction::identity(sp));
        for (std::size_t k : {std::size_t{0}, std::size_t{5}, std::size_t{2}}) {
            corpus.morphisms.push_back({ident, context_at(s, k), context_at(s, k * 2 + 1),
                                        space_tags[s] + ";fn=identity;ctx=" + std::to_string(k)});
        }
        auto constant = std::make_shared<const FiniteFunction>(
            FiniteFunction::constant(sp, sp, sp->point_count() - 1));
        corpus.morphisms.push_back({constant, context_at(s, 1), context_at(s, 3),
                                    space_tags[s] + ";fn=constant"});
    }
    {
        auto fx1 = examples::ex_4_1();
        corpus.morphisms.push_back({fx1.f, fx1.dom, fx1.cod, "paper-example(4.1)"});
        auto fx2 = examples::ex_4_2();
        corpus.morphisms.push_back({fx2.f, fx2.dom, fx2.cod, "paper-example(4.2)"});
    }

    for (int k = 0; k < spec.random_functions; ++k) {
        const std::size_t sd = static_cast<std::size_t>(k) % corpus.spaces.size();
        const std::size_t sc = (static_cast<std::size_t>(k) * 7 + 3) % corpus.spaces.size();
        auto f = std::make_shared<const FiniteFunction>(
            random_function(corpus.spaces[sd], corpus.spaces[sc], spec.seed, k));
        corpus.morphisms.push_back({f, context_at(sd, k), context_at(sc, k + 11),
                                    "fn=random(seed=" + std::to_string(spec.seed) + ",draw=" +
                                        std::to_string(k) + ");dom=" + space_tags[sd] +
                                        ";cod=" + space_tags[sc]});
    }

    // Composition triples: identity and constant chains first, then random.
    for (std::size_t s = 0; s < corpus.spaces.size(); s += 7) {
        const SpacePtr& sp = corpus.spaces[s];
        auto ident = std::make_shared<const FiniteFunction>(FiniteFunction::identity(sp));
        auto ctx = context_at(s, 0);
        corpus.triples.push_back({ident, ident, ctx, ctx, ctx, space_tags[s] + ";triple=identity"});
        auto constant = std::make_shared<const FiniteFunction>(
            FiniteFunction::constant(sp, sp, 0));
        corpus.triples.push_back(
            {constant, ident, ctx, ctx, ctx, space_tags[s] + ";triple=constant-then-identity"});
    }
    for (int t = 0; t < spec.random_triples; ++t) {
        const std::size_t sx = static_cast<std::size_t>(t) % corpus.spaces.size();
        const std::size_t sy = (static_cast<std::size_t>(t) * 5 + 2) % corpus.spaces.size();
        const std::size_t sz = (static_cast<std::size_t>(t) * 11 + 6) % corpus.spaces.size();
        auto f = std::make_shared<const FiniteFunction>(
            random_function(corpus.spaces[sx], corpus.spaces[sy], spec.seed + 1, t * 2));
        auto g = std::make_shared<const FiniteFunction>(
            random_function(corpus.spaces[sy], corpus.spaces[sz], spec.seed + 1, t * 2 + 1));
        corpus.triples.push_back({f, g, context_at(sx, t), context_at(sy, t + 3),
                                  context_at(sz, t + 5),
                                  "triple=random(seed=" + std::to_string(spec.seed + 1) +
                                      ",draw=" + std::to_string(t) + ")"});
    }

    return corpus;
}

}  // namespace estarlab
