#pragma once

#include <cstdint>
#include <string>

#include "estarlab/morphism.hpp"
#include "estarlab/operation.hpp"

namespace estarlab {

enum class OperationProfile { table_uniform, piecewise, closure_biased };

OperationProfile profile_from_name(const std::string& name);
std::string profile_name(OperationProfile p);

/// Deterministic expansive operation on the space's e*-open family.
/// Images are V ∪ extra, so expansiveness holds by construction;
/// identical (seed, draw, profile) triples always yield the same spec.
OperationSpec random_operation(const FiniteSpace& space, std::uint64_t seed, std::uint64_t draw,
                               OperationProfile profile);

/// Deterministic random function between two spaces.
FiniteFunction random_function(SpacePtr domain, SpacePtr codomain, std::uint64_t seed,
                               std::uint64_t draw);

}  // namespace estarlab
