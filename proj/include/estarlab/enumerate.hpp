#pragma once

#include <vector>

#include "estarlab/space.hpp"

namespace estarlab {

/// All labeled topologies on n points (1 ≤ n ≤ 4), each exactly once, in a
/// deterministic order: candidate families are indexed by a bitmask over
/// the proper nonempty subsets, ascending. Counts: 1, 4, 29, 355.
std::vector<SpacePtr> enumerate_topologies(int n);

/// Point names used for enumerated spaces: p1, p2, ...
std::vector<std::string> generic_points(int n);

}  // namespace estarlab
