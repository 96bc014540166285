#pragma once

#include <memory>
#include <optional>
#include <vector>

#include "estarlab/operation.hpp"

namespace estarlab {

/// A space together with an ordered operation pair (γ, γ′) and everything
/// derived from it: per-point minimal-reach antichains, the e*_[γ,γ′]-open
/// family and its complements. Immutable after construction.
///
/// The reach of a point x is any U^γ ∩ V^γ′ with U, V e*-open
/// neighbourhoods of x; only the ⊆-minimal reaches matter for every
/// predicate here, which turns the Def-style double loops into antichain
/// scans.
class BiopContext {
  public:
    BiopContext(OperationPtr gamma, OperationPtr gamma_prime);

    const FiniteSpace& space() const noexcept { return gamma_->space(); }
    const SpacePtr& space_ptr() const noexcept { return gamma_->space_ptr(); }
    const BoundOperation& gamma() const noexcept { return *gamma_; }
    const BoundOperation& gamma_prime() const noexcept { return *gamma_prime_; }

    /// ⊆-minimal elements of { U^γ ∩ V^γ′ : U,V e*-open, x ∈ U, x ∈ V }.
    const std::vector<Mask>& minimal_reach(int x) const { return reach_[x]; }

    bool is_biopen(Mask a) const;
    const SetFamily& biopen_family() const noexcept { return biopen_; }
    const SetFamily& biclosed_family() const noexcept { return biclosed_; }

    /// The classical variant with U, V ranging over τ only.
    bool is_classic_biopen(Mask a) const;

    /// e*Cl_[γ,γ′](A): points whose every reach meets A.
    Mask closure_pointwise(Mask a) const;

    /// e*_[γ,γ′]-Cl(A): intersection of the bi-closed supersets of A.
    Mask closure_lattice(Mask a) const;

    /// e*_[γ,γ′]-Int(A): union of the bi-open subsets of A.
    Mask interior(Mask a) const;

    /// e*_[γ,γ′]-regular space: every e*-open neighbourhood of every point
    /// contains one of that point's minimal reaches.
    bool is_regular_space(SpaceRegularityWitness* witness = nullptr) const;

  private:
    OperationPtr gamma_;
    OperationPtr gamma_prime_;
    std::vector<std::vector<Mask>> reach_;
    SetFamily biopen_;
    SetFamily biclosed_;
};

using BiopContextPtr = std::shared_ptr<const BiopContext>;

BiopContextPtr make_context(OperationPtr gamma, OperationPtr gamma_prime);

}  // namespace estarlab
