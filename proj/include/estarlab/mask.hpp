#pragma once

#include <bit>
#include <cstdint>
#include <string>
#include <vector>

namespace estarlab {

/// A subset of the ground set, one bit per point. Width is capped at 16
/// points so that every derived family (2^|X| subsets) stays materializable.
using Mask = std::uint32_t;

inline constexpr int kMaxPoints = 16;

constexpr Mask full_mask(int n) { return (Mask{1} << n) - 1; }

constexpr bool subset_of(Mask a, Mask b) { return (a & ~b) == 0; }

constexpr bool has_point(Mask a, int p) { return (a >> p) & 1u; }

inline int popcount(Mask a) { return std::popcount(a); }

/// Points of `m` as ascending indices.
inline std::vector<int> mask_points(Mask m) {
    std::vector<int> out;
    while (m != 0) {
        int p = std::countr_zero(m);
        out.push_back(p);
        m &= m - 1;
    }
    return out;
}

/// Keeps only the ⊆-minimal elements, result sorted ascending as integers.
std::vector<Mask> minimal_antichain(std::vector<Mask> sets);

}  // namespace estarlab
