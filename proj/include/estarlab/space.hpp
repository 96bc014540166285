#pragma once

#include <memory>
#include <string>
#include <vector>

#include "estarlab/family.hpp"
#include "estarlab/mask.hpp"

namespace estarlab {

enum class TopologyMode {
    reject,    ///< candidate family must already be a topology
    complete,  ///< close the candidate family under unions/intersections
};

/// A finite topological space: named points plus a validated topology.
///
/// All classical operators are precomputed or table-driven:
///   - interior/closure via a subset-lattice DP (O(2^n * n) once),
///   - the δ-operators via per-point antichains of minimal regular-open
///     neighbourhoods Int(Cl(U)),
///   - the e*-open family by sweeping the defining inclusion
///     A ⊆ Cl(Int(Cl_δ(A))) over all 2^n subsets.
///
/// Instances are immutable after construction and freely shareable.
class FiniteSpace {
  public:
    FiniteSpace(std::vector<std::string> points, std::vector<Mask> opens,
                TopologyMode mode = TopologyMode::reject);

    int point_count() const noexcept { return n_; }
    Mask universe() const noexcept { return full_; }
    const std::vector<std::string>& points() const noexcept { return points_; }

    /// Open sets in ascending mask order.
    const std::vector<Mask>& opens() const noexcept { return opens_; }

    bool is_open(Mask a) const { return open_bits_[a]; }
    bool is_closed(Mask a) const { return open_bits_[complement(a)]; }

    Mask complement(Mask a) const { return full_ & ~a; }

    Mask interior(Mask a) const { return int_table_[a]; }
    Mask closure(Mask a) const { return complement(int_table_[complement(a)]); }

    Mask delta_interior(Mask a) const;
    Mask delta_closure(Mask a) const;

    bool is_regular_open(Mask a) const { return interior(closure(a)) == a; }
    bool is_regular_closed(Mask a) const { return closure(interior(a)) == a; }

    /// Minimal sets Int(Cl(U)) over open U containing x; every regular-open
    /// neighbourhood of x refines to one of these.
    const std::vector<Mask>& min_regular_nbhds(int x) const { return min_reg_[x]; }

    const SetFamily& estar_opens() const noexcept { return estar_opens_; }
    const SetFamily& estar_closeds() const noexcept { return estar_closeds_; }
    bool is_estar_open(Mask a) const { return estar_opens_.contains(a); }

    /// e*-open sets containing point x, ascending.
    const std::vector<Mask>& estar_nbhds(int x) const { return estar_nbhds_[x]; }

    Mask estar_closure(Mask a) const;
    Mask estar_interior(Mask a) const;

    /// Index of a named point; throws unknown_point.
    int point_index(const std::string& name) const;

    /// Mask from point names; throws unknown_point.
    Mask mask_of(const std::vector<std::string>& names) const;

    /// Canonical rendering, e.g. "{w1,w2}"; "{}" for the empty set.
    std::string set_name(Mask a) const;

  private:
    void build_tables();

    std::vector<std::string> points_;
    int n_ = 0;
    Mask full_ = 0;
    std::vector<Mask> opens_;
    std::vector<bool> open_bits_;
    std::vector<Mask> int_table_;
    std::vector<std::vector<Mask>> min_reg_;
    std::vector<std::vector<Mask>> estar_nbhds_;
    SetFamily estar_opens_;
    SetFamily estar_closeds_;
};

using SpacePtr = std::shared_ptr<const FiniteSpace>;

/// Validates (or completes) a candidate topology given as name lists.
/// Errors: width_exceeded, duplicate_point, unknown_point, not_a_topology.
SpacePtr validate_topology(std::vector<std::string> points,
                           const std::vector<std::vector<std::string>>& candidate_opens,
                           TopologyMode mode = TopologyMode::reject);

/// Mask-level variant used by generators and tests.
SpacePtr make_space(std::vector<std::string> points, std::vector<Mask> opens,
                    TopologyMode mode = TopologyMode::reject);

}  // namespace estarlab
