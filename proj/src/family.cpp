#include "estarlab/family.hpp"

#include <algorithm>

namespace estarlab {

SetFamily::SetFamily(int width, std::vector<Mask> members, std::string label)
    : width_(width), label_(std::move(label)), members_(std::move(members)) {
    std::sort(members_.begin(), members_.end());
    members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
    const Mask full = full_mask(width_);
    for (Mask m : members_) {
        if (!subset_of(m, full)) fail(Errc::width_exceeded, "family member exceeds ground-set width");
    }
    bits_.assign(std::size_t{1} << width_, false);
    for (Mask m : members_) bits_[m] = true;
}

SetFamily SetFamily::complements(std::string label) const {
    const Mask full = full_mask(width_);
    std::vector<Mask> out;
    out.reserve(members_.size());
    for (Mask m : members_) out.push_back(full & ~m);
    return SetFamily(width_, std::move(out), std::move(label));
}

bool SetFamily::union_closed() const {
    if (members_.size() <= 20) {
        // Exhaustive over all sub-collections.
        const std::size_t k = members_.size();
        for (std::size_t sel = 1; sel < (std::size_t{1} << k); ++sel) {
            Mask u = 0;
            for (std::size_t i = 0; i < k; ++i)
                if ((sel >> i) & 1u) u |= members_[i];
            if (!contains(u)) return false;
        }
        return true;
    }
    // Pairwise unions generate all finite unions.
    for (Mask a : members_)
        for (Mask b : members_)
            if (!contains(a | b)) return false;
    return true;
}

}  // namespace estarlab
