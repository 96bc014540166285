#include "estarlab/random_gen.hpp"

#include "estarlab/errors.hpp"
#include "estarlab/rng.hpp"

namespace estarlab {

OperationProfile profile_from_name(const std::string& name) {
    if (name == "table-uniform") return OperationProfile::table_uniform;
    if (name == "piecewise") return OperationProfile::piecewise;
    if (name == "closure-biased") return OperationProfile::closure_biased;
    fail(Errc::parse_error, "unknown operation profile: " + name);
}

std::string profile_name(OperationProfile p) {
    switch (p) {
        case OperationProfile::table_uniform: return "table-uniform";
        case OperationProfile::piecewise: return "piecewise";
        case OperationProfile::closure_biased: return "closure-biased";
    }
    return "?";
}

namespace {

OperationSpec primitive_for(std::uint64_t pick) {
    switch (pick % 3) {
        case 0: return OperationSpec::identity();
        case 1: return OperationSpec::closure_op();
        default: return OperationSpec::constant_x();
    }
}

}  // namespace

OperationSpec random_operation(const FiniteSpace& space, std::uint64_t seed, std::uint64_t draw,
                               OperationProfile profile) {
    SplitMix64 rng = stream_for(seed, draw);
    const Mask full = space.universe();

    switch (profile) {
        case OperationProfile::table_uniform: {
            std::vector<std::pair<Mask, Mask>> entries;
            for (Mask v : space.estar_opens().members()) {
                const Mask extra = static_cast<Mask>(rng.next()) & full & ~v;
                entries.emplace_back(v, v | extra);
            }
            return OperationSpec::from_table(std::move(entries));
        }
        case OperationProfile::closure_biased: {
            std::vector<std::pair<Mask, Mask>> entries;
            for (Mask v : space.estar_opens().members()) {
                const Mask base = space.closure(v);
                // Sparse extra bits: AND of two draws keeps images near Cl(V).
                const Mask extra =
                    (rng.next() & rng.next() & 1u) ? (static_cast<Mask>(rng.next()) &
                                                      static_cast<Mask>(rng.next()) & full & ~base)
                                                   : 0;
                entries.emplace_back(v, base | extra);
            }
            return OperationSpec::from_table(std::move(entries));
        }
        case OperationProfile::piecewise: {
            const int p = static_cast<int>(rng.below(space.point_count()));
            OperationSpec then_spec = primitive_for(rng.next());
            OperationSpec else_spec = primitive_for(rng.next());
            return OperationSpec::piecewise(Condition::contains_point_of(p), std::move(then_spec),
                                            std::move(else_spec));
        }
    }
    fail(Errc::parse_error, "unreachable profile");
}

FiniteFunction random_function(SpacePtr domain, SpacePtr codomain, std::uint64_t seed,
                               std::uint64_t draw) {
    SplitMix64 rng = stream_for(seed ^ 0xF00DF00Dull, draw);
    std::vector<int> table(domain->point_count());
    for (int i = 0; i < domain->point_count(); ++i)
        table[i] = static_cast<int>(rng.below(codomain->point_count()));
    return FiniteFunction(std::move(domain), std::move(codomain), std::move(table));
}

}  // namespace estarlab
