#include "estarlab/morphism.hpp"

#include <algorithm>

#include "estarlab/errors.hpp"

namespace estarlab {

FiniteFunction::FiniteFunction(SpacePtr domain, SpacePtr codomain, std::vector<int> table)
    : domain_(std::move(domain)), codomain_(std::move(codomain)), table_(std::move(table)) {
    const int n = domain_->point_count();
    const int m = codomain_->point_count();
    if (static_cast<int>(table_.size()) != n)
        fail(Errc::space_mismatch, "function table must cover every domain point");
    for (int x = 0; x < n; ++x)
        if (table_[x] < 0 || table_[x] >= m)
            fail(Errc::unknown_point, "function image out of codomain range");
    preimage_of_point_.assign(m, 0);
    for (int x = 0; x < n; ++x) preimage_of_point_[table_[x]] |= Mask{1} << x;
}

FiniteFunction FiniteFunction::identity(SpacePtr space) {
    std::vector<int> t(space->point_count());
    for (int i = 0; i < space->point_count(); ++i) t[i] = i;
    return FiniteFunction(space, space, std::move(t));
}

FiniteFunction FiniteFunction::constant(SpacePtr domain, SpacePtr codomain, int codomain_point) {
    std::vector<int> t(domain->point_count(), codomain_point);
    return FiniteFunction(std::move(domain), std::move(codomain), std::move(t));
}

Mask FiniteFunction::image(Mask a) const {
    Mask out = 0;
    Mask rest = a;
    while (rest != 0) {
        int x = std::countr_zero(rest);
        rest &= rest - 1;
        out |= Mask{1} << table_[x];
    }
    return out;
}

Mask FiniteFunction::preimage(Mask b) const {
    Mask out = 0;
    Mask rest = b;
    while (rest != 0) {
        int y = std::countr_zero(rest);
        rest &= rest - 1;
        out |= preimage_of_point_[y];
    }
    return out;
}

bool FiniteFunction::is_bijective() const {
    if (domain_->point_count() != codomain_->point_count()) return false;
    return image(domain_->universe()) == codomain_->universe();
}

FiniteFunction FiniteFunction::inverse() const {
    if (!is_bijective()) fail(Errc::precondition_violated, "inverse of a non-bijective function");
    std::vector<int> t(codomain_->point_count());
    for (int x = 0; x < domain_->point_count(); ++x) t[table_[x]] = x;
    return FiniteFunction(codomain_, domain_, std::move(t));
}

FiniteFunction compose(const FiniteFunction& f, const FiniteFunction& g) {
    if (f.codomain_ptr() != g.domain_ptr())
        fail(Errc::space_mismatch, "composition requires codomain(f) = domain(g)");
    std::vector<int> t(f.domain().point_count());
    for (int x = 0; x < f.domain().point_count(); ++x) t[x] = g.map_point(f.map_point(x));
    return FiniteFunction(f.domain_ptr(), g.codomain_ptr(), std::move(t));
}

namespace {

void check_spaces(const FiniteFunction& f, const BiopContext& dom, const BiopContext& cod) {
    if (f.domain_ptr() != dom.space_ptr() || f.codomain_ptr() != cod.space_ptr())
        fail(Errc::space_mismatch, "function does not connect the given contexts");
}

/// Minimal domain reaches for the requested reading. The strict reading
/// applies γ to both neighbourhoods.
std::vector<std::vector<Mask>> domain_reaches(const BiopContext& dom, Def41Reading reading) {
    const FiniteSpace& sp = dom.space();
    std::vector<std::vector<Mask>> out(sp.point_count());
    if (reading == Def41Reading::resolved) {
        for (int x = 0; x < sp.point_count(); ++x) out[x] = dom.minimal_reach(x);
        return out;
    }
    const BoundOperation& g = dom.gamma();
    for (int x = 0; x < sp.point_count(); ++x) {
        std::vector<Mask> inter;
        const auto& imgs = g.min_images(x);
        for (Mask a : imgs)
            for (Mask b : imgs) inter.push_back(a & b);
        out[x] = minimal_antichain(std::move(inter));
    }
    return out;
}

}  // namespace

bool ContinuityVerdict::all_hold() const {
    return std::all_of(ok.begin(), ok.end(), [](bool b) { return b; });
}

bool ContinuityVerdict::all_agree() const {
    return std::all_of(ok.begin(), ok.end(), [&](bool b) { return b == ok[0]; });
}

bool is_bi_continuous(const FiniteFunction& f, const BiopContext& dom, const BiopContext& cod,
                      Def41Reading reading, ContinuityWitness* witness) {
    check_spaces(f, dom, cod);
    const auto reach_dom = domain_reaches(dom, reading);
    const int n = f.domain().point_count();
    for (int x = 0; x < n; ++x) {
        const int y = f.map_point(x);
        for (Mask target : cod.minimal_reach(y)) {
            bool found = false;
            for (Mask m : reach_dom[x]) {
                if (subset_of(f.image(m), target)) {
                    found = true;
                    break;
                }
            }
            if (!found) {
                if (witness)
                    *witness = {x, target,
                                "x=" + f.domain().points()[x] + ", no domain reach maps into " +
                                    f.codomain().set_name(target)};
                return false;
            }
        }
    }
    return true;
}

ContinuityVerdict continuity_conditions(const FiniteFunction& f, const BiopContext& dom,
                                        const BiopContext& cod, Def41Reading reading) {
    check_spaces(f, dom, cod);
    ContinuityVerdict v;
    const FiniteSpace& X = f.domain();
    const FiniteSpace& Y = f.codomain();
    const Mask full_x = X.universe();
    const Mask full_y = Y.universe();

    // (1) pointwise reach refinement
    {
        ContinuityWitness w;
        v.ok[0] = is_bi_continuous(f, dom, cod, reading, &w);
        if (!v.ok[0]) v.witness[0] = w;
    }

    // (2) f(e*Cl_[γ,γ′](A)) ⊆ e*Cl_[β,β′](f(A)) for every A ⊆ X
    v.ok[1] = true;
    for (Mask a = 0; a <= full_x; ++a) {
        if (!subset_of(f.image(dom.closure_pointwise(a)), cod.closure_pointwise(f.image(a)))) {
            v.ok[1] = false;
            v.witness[1] = {0, a, "A=" + X.set_name(a)};
            break;
        }
    }

    // (3) e*Cl_[γ,γ′](f⁻¹(B)) ⊆ f⁻¹(e*Cl_[β,β′](B)) for every B ⊆ Y
    v.ok[2] = true;
    for (Mask b = 0; b <= full_y; ++b) {
        if (!subset_of(dom.closure_pointwise(f.preimage(b)), f.preimage(cod.closure_pointwise(b)))) {
            v.ok[2] = false;
            v.witness[2] = {0, b, "B=" + Y.set_name(b)};
            break;
        }
    }

    // (4) preimages of bi-closed sets are bi-closed
    v.ok[3] = true;
    for (Mask b : cod.biclosed_family().members()) {
        if (!dom.biclosed_family().contains(f.preimage(b))) {
            v.ok[3] = false;
            v.witness[3] = {0, b, "B=" + Y.set_name(b) + ", preimage " + X.set_name(f.preimage(b))};
            break;
        }
    }

    // (5) f(e*_[γ,γ′]-Cl(A)) ⊆ e*_[β,β′]-Cl(f(A)) for every A ⊆ X
    v.ok[4] = true;
    for (Mask a = 0; a <= full_x; ++a) {
        if (!subset_of(f.image(dom.closure_lattice(a)), cod.closure_lattice(f.image(a)))) {
            v.ok[4] = false;
            v.witness[4] = {0, a, "A=" + X.set_name(a)};
            break;
        }
    }

    // (6) preimages of bi-open sets are bi-open
    v.ok[5] = true;
    for (Mask b : cod.biopen_family().members()) {
        if (!dom.biopen_family().contains(f.preimage(b))) {
            v.ok[5] = false;
            v.witness[5] = {0, b, "V=" + Y.set_name(b) + ", preimage " + X.set_name(f.preimage(b))};
            break;
        }
    }

    // (7) every bi-open neighbourhood of f(x) admits a bi-open U ∋ x with f(U) ⊆ W
    v.ok[6] = true;
    for (int x = 0; x < X.point_count() && v.ok[6]; ++x) {
        const int y = f.map_point(x);
        for (Mask w : cod.biopen_family().members()) {
            if (!has_point(w, y)) continue;
            bool found = false;
            for (Mask u : dom.biopen_family().members()) {
                if (has_point(u, x) && subset_of(f.image(u), w)) {
                    found = true;
                    break;
                }
            }
            if (!found) {
                v.ok[6] = false;
                v.witness[6] = {x, w, "x=" + X.points()[x] + ", W=" + Y.set_name(w)};
                break;
            }
        }
    }

    return v;
}

bool is_bi_closed_map(const FiniteFunction& f, const BiopContext& dom, const BiopContext& cod,
                      ClosedMapWitness* witness) {
    check_spaces(f, dom, cod);
    for (Mask a : dom.biclosed_family().members()) {
        if (!cod.biclosed_family().contains(f.image(a))) {
            if (witness) witness->set = a;
            return false;
        }
    }
    return true;
}

Mask closed_map_neighborhood_property(const FiniteFunction& f, const BiopContext& dom,
                                      const BiopContext& cod, Mask b, Mask u) {
    check_spaces(f, dom, cod);
    if (!is_bi_closed_map(f, dom, cod))
        fail(Errc::precondition_violated, "function is not bi-closed");
    if (!dom.biopen_family().contains(u))
        fail(Errc::precondition_violated, "U is not bi-open in the domain");
    if (!subset_of(f.preimage(b), u))
        fail(Errc::precondition_violated, "preimage of B is not contained in U");

    const Mask v = f.codomain().universe() & ~f.image(f.domain().universe() & ~u);
    if (!subset_of(b, v) || !subset_of(f.preimage(v), u) || !cod.biopen_family().contains(v))
        fail(Errc::precondition_violated, "neighbourhood property postcondition failed");
    return v;
}

}  // namespace estarlab
