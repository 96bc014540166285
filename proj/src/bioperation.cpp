#include "estarlab/bioperation.hpp"

#include <algorithm>

#include "estarlab/errors.hpp"

namespace estarlab {

BiopContext::BiopContext(OperationPtr gamma, OperationPtr gamma_prime)
    : gamma_(std::move(gamma)), gamma_prime_(std::move(gamma_prime)) {
    if (gamma_->space_ptr() != gamma_prime_->space_ptr())
        fail(Errc::space_mismatch, "operation pair bound to different spaces");

    const FiniteSpace& sp = space();
    const int n = sp.point_count();

    reach_.assign(n, {});
    for (int x = 0; x < n; ++x) {
        // Distinct images on each side keep the pair loop small.
        std::vector<Mask> left, right;
        for (Mask u : sp.estar_nbhds(x)) left.push_back(gamma_->apply(u));
        for (Mask v : sp.estar_nbhds(x)) right.push_back(gamma_prime_->apply(v));
        std::sort(left.begin(), left.end());
        left.erase(std::unique(left.begin(), left.end()), left.end());
        std::sort(right.begin(), right.end());
        right.erase(std::unique(right.begin(), right.end()), right.end());

        std::vector<Mask> inter;
        inter.reserve(left.size() * right.size());
        for (Mask a : left)
            for (Mask b : right) inter.push_back(a & b);
        reach_[x] = minimal_antichain(std::move(inter));
    }

    const Mask full = sp.universe();
    std::vector<Mask> members;
    members.push_back(0);  // empty set bi-open by convention
    for (Mask a = 1; a <= full; ++a) {
        bool ok = true;
        for (int x = 0; x < n && ok; ++x) {
            if (!has_point(a, x)) continue;
            bool refined = false;
            for (Mask m : reach_[x]) {
                if (subset_of(m, a)) {
                    refined = true;
                    break;
                }
            }
            ok = refined;
        }
        if (ok) members.push_back(a);
    }
    biopen_ = SetFamily(n, std::move(members), "e*O_[gamma,gamma']");
    biclosed_ = biopen_.complements("e*C_[gamma,gamma']");
}

bool BiopContext::is_biopen(Mask a) const {
    if (a == 0) return true;
    const int n = space().point_count();
    for (int x = 0; x < n; ++x) {
        if (!has_point(a, x)) continue;
        bool refined = false;
        for (Mask m : reach_[x]) {
            if (subset_of(m, a)) {
                refined = true;
                break;
            }
        }
        if (!refined) return false;
    }
    return true;
}

bool BiopContext::is_classic_biopen(Mask a) const {
    if (a == 0) return true;
    const FiniteSpace& sp = space();
    for (int x = 0; x < sp.point_count(); ++x) {
        if (!has_point(a, x)) continue;
        bool refined = false;
        for (Mask u : sp.opens()) {
            if (!has_point(u, x)) continue;
            for (Mask v : sp.opens()) {
                if (!has_point(v, x)) continue;
                if (subset_of(gamma_->apply(u) & gamma_prime_->apply(v), a)) {
                    refined = true;
                    break;
                }
            }
            if (refined) break;
        }
        if (!refined) return false;
    }
    return true;
}

Mask BiopContext::closure_pointwise(Mask a) const {
    const int n = space().point_count();
    Mask out = 0;
    for (int x = 0; x < n; ++x) {
        bool all_meet = true;
        for (Mask m : reach_[x]) {
            if ((m & a) == 0) {
                all_meet = false;
                break;
            }
        }
        if (all_meet) out |= Mask{1} << x;
    }
    return out;
}

Mask BiopContext::closure_lattice(Mask a) const {
    Mask out = space().universe();
    for (Mask f : biclosed_.members())
        if (subset_of(a, f)) out &= f;
    return out;
}

Mask BiopContext::interior(Mask a) const {
    Mask out = 0;
    for (Mask g : biopen_.members())
        if (subset_of(g, a)) out |= g;
    return out;
}

bool BiopContext::is_regular_space(SpaceRegularityWitness* witness) const {
    const FiniteSpace& sp = space();
    for (int x = 0; x < sp.point_count(); ++x) {
        for (Mask u : sp.estar_nbhds(x)) {
            bool found = false;
            for (Mask m : reach_[x]) {
                if (subset_of(m, u)) {
                    found = true;
                    break;
                }
            }
            if (!found) {
                if (witness) *witness = {x, u};
                return false;
            }
        }
    }
    return true;
}

BiopContextPtr make_context(OperationPtr gamma, OperationPtr gamma_prime) {
    return std::make_shared<const BiopContext>(std::move(gamma), std::move(gamma_prime));
}

}  // namespace estarlab
