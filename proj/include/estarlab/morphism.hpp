#pragma once

#include <array>
#include <optional>
#include <string>

#include "estarlab/bioperation.hpp"

namespace estarlab {

/// A total function between two finite spaces, with mask-level image and
/// preimage maps.
class FiniteFunction {
  public:
    FiniteFunction(SpacePtr domain, SpacePtr codomain, std::vector<int> table);

    static FiniteFunction identity(SpacePtr space);
    static FiniteFunction constant(SpacePtr domain, SpacePtr codomain, int codomain_point);

    const FiniteSpace& domain() const noexcept { return *domain_; }
    const FiniteSpace& codomain() const noexcept { return *codomain_; }
    const SpacePtr& domain_ptr() const noexcept { return domain_; }
    const SpacePtr& codomain_ptr() const noexcept { return codomain_; }
    const std::vector<int>& table() const noexcept { return table_; }

    int map_point(int x) const { return table_[x]; }
    Mask image(Mask a) const;
    Mask preimage(Mask b) const;

    bool is_bijective() const;
    FiniteFunction inverse() const;  // precondition: bijective

  private:
    SpacePtr domain_;
    SpacePtr codomain_;
    std::vector<int> table_;
    std::vector<Mask> preimage_of_point_;  // per codomain point
};

/// g ∘ f; requires codomain(f) == domain(g).
FiniteFunction compose(const FiniteFunction& f, const FiniteFunction& g);

/// Which reading of the bi-continuity definition to use on the domain
/// side: the resolved one applies γ′ to the second neighbourhood (the
/// reading every proof uses); the strict one applies γ to both, following
/// the definition's literal text.
enum class Def41Reading { resolved, strict };

struct ContinuityWitness {
    int point = 0;        // domain point x
    Mask target = 0;      // codomain set that could not be handled
    std::string detail;   // rendered description
};

struct ContinuityVerdict {
    std::array<bool, 7> ok{};  // index i = condition (i+1)
    std::array<std::optional<ContinuityWitness>, 7> witness;

    bool c(int i) const { return ok[i - 1]; }
    bool all_hold() const;
    bool all_agree() const;
};

/// Condition (1): pointwise reach refinement between the two pairs.
bool is_bi_continuous(const FiniteFunction& f, const BiopContext& dom, const BiopContext& cod,
                      Def41Reading reading = Def41Reading::resolved,
                      ContinuityWitness* witness = nullptr);

/// Evaluates all seven characterizations independently.
ContinuityVerdict continuity_conditions(const FiniteFunction& f, const BiopContext& dom,
                                        const BiopContext& cod,
                                        Def41Reading reading = Def41Reading::resolved);

struct ClosedMapWitness {
    Mask set = 0;  // bi-closed domain set whose image fails
};

bool is_bi_closed_map(const FiniteFunction& f, const BiopContext& dom, const BiopContext& cod,
                      ClosedMapWitness* witness = nullptr);

/// For a bi-closed f and bi-open U ⊇ f⁻¹(B), returns V = Y \ f(X\U); the
/// postconditions (B ⊆ V, f⁻¹(V) ⊆ U, V bi-open) are enforced.
Mask closed_map_neighborhood_property(const FiniteFunction& f, const BiopContext& dom,
                                      const BiopContext& cod, Mask b, Mask u);

}  // namespace estarlab
