#include "estarlab/space.hpp"

#include <algorithm>
#include <set>

#include "estarlab/errors.hpp"

namespace estarlab {

namespace {

std::vector<Mask> complete_family(std::vector<Mask> fam, Mask full) {
    std::set<Mask> s(fam.begin(), fam.end());
    s.insert(0);
    s.insert(full);
    bool grew = true;
    while (grew) {
        grew = false;
        std::vector<Mask> cur(s.begin(), s.end());
        for (Mask a : cur)
            for (Mask b : cur) {
                if (s.insert(a | b).second) grew = true;
                if (s.insert(a & b).second) grew = true;
            }
    }
    return {s.begin(), s.end()};
}

}  // namespace

FiniteSpace::FiniteSpace(std::vector<std::string> points, std::vector<Mask> opens,
                         TopologyMode mode)
    : points_(std::move(points)) {
    n_ = static_cast<int>(points_.size());
    if (n_ < 1 || n_ > kMaxPoints)
        fail(Errc::width_exceeded, "point count must be between 1 and 16, got " + std::to_string(n_));
    full_ = full_mask(n_);

    {
        std::set<std::string> seen;
        for (const auto& p : points_)
            if (!seen.insert(p).second) fail(Errc::duplicate_point, "duplicate point name: " + p);
    }

    for (Mask m : opens)
        if (!subset_of(m, full_)) fail(Errc::width_exceeded, "candidate open set exceeds ground set");

    if (mode == TopologyMode::complete) {
        opens_ = complete_family(std::move(opens), full_);
    } else {
        std::sort(opens.begin(), opens.end());
        opens.erase(std::unique(opens.begin(), opens.end()), opens.end());
        opens_ = std::move(opens);
        auto in = [&](Mask m) { return std::binary_search(opens_.begin(), opens_.end(), m); };
        if (!in(0)) fail(Errc::not_a_topology, "{} missing from the candidate topology");
        if (!in(full_)) fail(Errc::not_a_topology, set_name(full_) + " (the whole set) missing from the candidate topology");
        for (Mask a : opens_)
            for (Mask b : opens_) {
                if (!in(a | b))
                    fail(Errc::not_a_topology,
                         "A\xE2\x88\xAA""B \xE2\x88\x89 \xCF\x84 for A=" + set_name(a) + ", B=" + set_name(b));
                if (!in(a & b))
                    fail(Errc::not_a_topology,
                         "A\xE2\x88\xA9""B \xE2\x88\x89 \xCF\x84 for A=" + set_name(a) + ", B=" + set_name(b));
            }
    }

    build_tables();
}

void FiniteSpace::build_tables() {
    const std::size_t count = std::size_t{1} << n_;

    open_bits_.assign(count, false);
    for (Mask m : opens_) open_bits_[m] = true;

    // Interior by subset-lattice DP: any open strictly inside A misses some
    // point of A, so Int(A) = A when A is open, else the union of the
    // interiors of the one-point-removed subsets.
    int_table_.assign(count, 0);
    for (Mask a = 0; a < static_cast<Mask>(count); ++a) {
        if (open_bits_[a]) {
            int_table_[a] = a;
            continue;
        }
        Mask u = 0;
        Mask rest = a;
        while (rest != 0) {
            Mask bit = rest & (Mask(0) - rest);
            rest ^= bit;
            u |= int_table_[a & ~bit];
        }
        int_table_[a] = u;
    }

    // Per-point minimal regular-open neighbourhoods Int(Cl(U)), U open.
    min_reg_.assign(n_, {});
    for (int x = 0; x < n_; ++x) {
        std::vector<Mask> reach;
        for (Mask u : opens_)
            if (has_point(u, x)) reach.push_back(interior(closure(u)));
        min_reg_[x] = minimal_antichain(std::move(reach));
    }

    // The e*-open family: A ⊆ Cl(Int(Cl_δ(A))) swept over all subsets.
    std::vector<Mask> estar;
    for (Mask a = 0; a < static_cast<Mask>(count); ++a)
        if (subset_of(a, closure(interior(delta_closure(a))))) estar.push_back(a);
    estar_opens_ = SetFamily(n_, std::move(estar), "e*O");
    estar_closeds_ = estar_opens_.complements("e*C");

    estar_nbhds_.assign(n_, {});
    for (Mask m : estar_opens_.members())
        for (int x = 0; x < n_; ++x)
            if (has_point(m, x)) estar_nbhds_[x].push_back(m);
}

Mask FiniteSpace::delta_interior(Mask a) const {
    // Existential reading: x has some open U with Int(Cl(U)) ⊆ A; the
    // minimal antichain suffices as witness pool.
    Mask out = 0;
    for (int x = 0; x < n_; ++x) {
        for (Mask r : min_reg_[x]) {
            if (subset_of(r, a)) {
                out |= Mask{1} << x;
                break;
            }
        }
    }
    return out;
}

Mask FiniteSpace::delta_closure(Mask a) const {
    Mask out = 0;
    for (int x = 0; x < n_; ++x) {
        bool all_meet = true;
        for (Mask r : min_reg_[x]) {
            if ((r & a) == 0) {
                all_meet = false;
                break;
            }
        }
        if (all_meet) out |= Mask{1} << x;
    }
    return out;
}

Mask FiniteSpace::estar_closure(Mask a) const {
    Mask out = full_;
    for (Mask f : estar_closeds_.members())
        if (subset_of(a, f)) out &= f;
    return out;
}

Mask FiniteSpace::estar_interior(Mask a) const {
    Mask out = 0;
    for (Mask g : estar_opens_.members())
        if (subset_of(g, a)) out |= g;
    return out;
}

int FiniteSpace::point_index(const std::string& name) const {
    for (int i = 0; i < n_; ++i)
        if (points_[i] == name) return i;
    fail(Errc::unknown_point, "unknown point name: " + name);
}

Mask FiniteSpace::mask_of(const std::vector<std::string>& names) const {
    Mask m = 0;
    for (const auto& nm : names) m |= Mask{1} << point_index(nm);
    return m;
}

std::string FiniteSpace::set_name(Mask a) const {
    std::string out = "{";
    bool first = true;
    for (int i = 0; i < n_; ++i) {
        if (!has_point(a, i)) continue;
        if (!first) out += ",";
        out += points_[i];
        first = false;
    }
    out += "}";
    return out;
}

SpacePtr validate_topology(std::vector<std::string> points,
                           const std::vector<std::vector<std::string>>& candidate_opens,
                           TopologyMode mode) {
    if (points.size() > static_cast<std::size_t>(kMaxPoints))
        fail(Errc::width_exceeded, "point count must be between 1 and 16");
    // Resolve names against a temporary index before constructing the space.
    std::vector<Mask> masks;
    masks.reserve(candidate_opens.size());
    auto index_of = [&](const std::string& nm) -> int {
        for (std::size_t i = 0; i < points.size(); ++i)
            if (points[i] == nm) return static_cast<int>(i);
        fail(Errc::unknown_point, "open set uses unknown point name: " + nm);
    };
    for (const auto& subset : candidate_opens) {
        Mask m = 0;
        for (const auto& nm : subset) m |= Mask{1} << index_of(nm);
        masks.push_back(m);
    }
    return std::make_shared<const FiniteSpace>(std::move(points), std::move(masks), mode);
}

SpacePtr make_space(std::vector<std::string> points, std::vector<Mask> opens, TopologyMode mode) {
    return std::make_shared<const FiniteSpace>(std::move(points), std::move(opens), mode);
}

}  // namespace estarlab
