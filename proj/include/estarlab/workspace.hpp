#pragma once

#include <map>
#include <string>
#include <vector>

#include <json.hpp>

#include "estarlab/morphism.hpp"
#include "estarlab/operation.hpp"

namespace estarlab {

/// A parsed workspace document: one space, named bound operations, and
/// named function tables (point name -> point name, codomain resolved at
/// command time). Subsets in files are always point-name lists, never
/// masks, so documents survive point reordering.
struct Workspace {
    SpacePtr space;
    std::map<std::string, OperationPtr> operations;
    std::map<std::string, std::map<std::string, std::string>> functions;
    bool complete_topology = false;
};

/// Parses and validates a document; error messages carry the JSON path of
/// the offending element. Errors: parse_error, unknown_point,
/// not_a_topology, plus the binding errors.
Workspace parse_workspace(const std::string& text);
Workspace parse_workspace_json(const nlohmann::json& doc);

/// Canonical serialization; parse(serialize(w)) reproduces the workspace.
nlohmann::json workspace_to_json(const Workspace& w);

/// Operation spec <-> JSON (needs the space to render masks as name lists).
nlohmann::json operation_spec_to_json(const OperationSpec& spec, const FiniteSpace& sp);
OperationSpec operation_spec_from_json(const nlohmann::json& j, const FiniteSpace& sp,
                                       const std::string& path);

/// Builds the named function against an explicit codomain.
FiniteFunction resolve_function(const Workspace& dom, const std::string& name,
                                const SpacePtr& codomain);

}  // namespace estarlab
