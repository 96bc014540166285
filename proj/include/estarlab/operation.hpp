#pragma once

#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "estarlab/space.hpp"

namespace estarlab {

/// Closed-form condition language for piecewise operations. Three kinds
/// cover every worked example: point membership, set equality, and
/// membership in an explicit list of sets.
struct Condition {
    enum class Kind { contains_point, equals_set, member_of };
    Kind kind = Kind::contains_point;
    int point = 0;            // contains_point
    Mask set = 0;             // equals_set
    std::vector<Mask> list;   // member_of (kept sorted)

    static Condition contains_point_of(int p);
    static Condition equals(Mask s);
    static Condition member_of(std::vector<Mask> sets);

    bool eval(Mask v) const;
    bool operator==(const Condition&) const = default;
};

/// Serializable spec of an expansive operation on the e*-open family.
/// No user code ever runs: tables plus a fixed primitive vocabulary.
struct OperationSpec {
    enum class Kind { table, identity, constant_x, closure_op, piecewise };

    Kind kind = Kind::identity;
    std::vector<std::pair<Mask, Mask>> table;  // sorted by key
    Condition cond;
    std::vector<OperationSpec> children;  // piecewise: [then, else]

    static OperationSpec identity();
    static OperationSpec constant_x();
    static OperationSpec closure_op();
    static OperationSpec from_table(std::vector<std::pair<Mask, Mask>> entries);
    static OperationSpec piecewise(Condition c, OperationSpec then_spec, OperationSpec else_spec);

    bool operator==(const OperationSpec&) const = default;
};

/// Resolves the spec on one e*-open set. Throws table_incomplete when a
/// table lacks the key.
Mask resolve(const OperationSpec& spec, const FiniteSpace& space, Mask v);

/// An operation bound to a space: the image of every e*-open set is
/// materialized at bind time and expansiveness (V ⊆ V^γ) is enforced.
/// Immutable afterwards and safe to share.
class BoundOperation {
  public:
    BoundOperation(SpacePtr space, OperationSpec spec);

    const FiniteSpace& space() const noexcept { return *space_; }
    const SpacePtr& space_ptr() const noexcept { return space_; }
    const OperationSpec& spec() const noexcept { return spec_; }

    /// Cache lookup; throws not_in_domain when v is not e*-open.
    Mask apply(Mask v) const;

    /// Minimal elements of { U^γ : U e*-open, x ∈ U }.
    const std::vector<Mask>& min_images(int x) const { return min_images_[x]; }

  private:
    SpacePtr space_;
    OperationSpec spec_;
    std::vector<Mask> images_;  // indexed by mask, valid on e*O
    std::vector<std::vector<Mask>> min_images_;
};

using OperationPtr = std::shared_ptr<const BoundOperation>;

OperationPtr bind_operation(SpacePtr space, OperationSpec spec);

struct RegularityWitness {
    int point = 0;
    Mask u = 0, v = 0;
};

/// Def of an e*-regular operation: any two e*-open neighbourhoods' images
/// are jointly refined by a third's image. Witness is the least failing
/// (point, U, V) in scan order.
bool is_estar_regular(const BoundOperation& op, RegularityWitness* witness = nullptr);

/// e*O(X,τ)_γ: sets A whose every point has an e*-open U with U^γ ⊆ A.
SetFamily single_op_open_family(const BoundOperation& op);

struct OpennessWitness {
    int point = 0;
    Mask u = 0;
};

/// e*-open operation: every image U^γ of an e*-open neighbourhood of x
/// contains an e*_γ-open neighbourhood of x.
bool is_estar_open_operation(const BoundOperation& op, OpennessWitness* witness = nullptr);

struct SpaceRegularityWitness {
    int point = 0;
    Mask v = 0;
};

/// e*_γ-regular space: every e*-open neighbourhood V of x contains some
/// image U^γ with U an e*-open neighbourhood of x.
bool is_estar_gamma_regular_space(const BoundOperation& op,
                                  SpaceRegularityWitness* witness = nullptr);

/// Single-operation closure e*Cl_γ(A) = { x : U^γ ∩ A ≠ ∅ for every
/// e*-open U containing x } (the γ′ = X reduction of the pointwise
/// bi-closure).
Mask single_op_closure(const BoundOperation& op, Mask a);

}  // namespace estarlab
