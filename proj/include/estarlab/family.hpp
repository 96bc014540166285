#pragma once

#include <string>
#include <vector>

#include "estarlab/errors.hpp"
#include "estarlab/mask.hpp"

namespace estarlab {

/// A family of subsets of a fixed-width ground set, stored both as a sorted
/// canonical list (deterministic iteration/serialization) and as a membership
/// bitset (O(1) lookup).
class SetFamily {
  public:
    SetFamily() = default;

    SetFamily(int width, std::vector<Mask> members, std::string label);

    int width() const noexcept { return width_; }
    const std::string& label() const noexcept { return label_; }

    /// Members in ascending mask order.
    const std::vector<Mask>& members() const noexcept { return members_; }
    std::size_t size() const noexcept { return members_.size(); }

    bool contains(Mask m) const { return m <= full_mask(width_) && bits_[m]; }

    /// Family of complements, canonical order.
    SetFamily complements(std::string label) const;

    /// True if the union of every sub-collection stays in the family.
    /// Exhaustive over sub-collections when the family is small, otherwise
    /// checked over all pairs plus the whole-family union (unions of pairs
    /// generate all finite unions).
    bool union_closed() const;

    bool operator==(const SetFamily& other) const {
        return width_ == other.width_ && members_ == other.members_;
    }

  private:
    int width_ = 0;
    std::string label_;
    std::vector<Mask> members_;
    std::vector<bool> bits_;
};

}  // namespace estarlab
