#include "estarlab/mask.hpp"

#include <algorithm>

namespace estarlab {

std::vector<Mask> minimal_antichain(std::vector<Mask> sets) {
    std::sort(sets.begin(), sets.end());
    sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
    // Sort by popcount so each candidate only needs checking against
    // already-accepted (smaller or equal cardinality) members.
    std::stable_sort(sets.begin(), sets.end(),
                     [](Mask a, Mask b) { return popcount(a) < popcount(b); });
    std::vector<Mask> out;
    for (Mask s : sets) {
        bool dominated = false;
        for (Mask m : out) {
            if (subset_of(m, s)) {
                dominated = true;
                break;
            }
        }
        if (!dominated) out.push_back(s);
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace estarlab
