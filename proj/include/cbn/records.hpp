#pragma once

#include <json.hpp>

#include "cbn/analysis.hpp"
#include "cbn/minctrl.hpp"
#include "cbn/oracle.hpp"
#include "cbn/reduction.hpp"

namespace cbn {

// Machine-readable records. Node and variable names use the text spelling
// (X3, U3, v3, E1_3) so records are readable without the id conventions.

/// {controllable, reason, witness}; witness is a cycle (list of names), a node name, or null.
nlohmann::json to_json(const ControllabilityVerdict& verdict, const DependencyGraph& g);

/// List of paths, each a list of node names.
nlohmann::json to_json(const PathDecomposition& paths, const DependencyGraph& g);

/// {indices, cardinality, exact, tested_count}, plus elapsed when `with_timing`.
nlohmann::json to_json(const MinControlResult& result, bool with_timing = false);

/// {Y, gamma, total_controls, decision}.
nlohmann::json to_json(const ReductionResult& result, const ReductionInstance& instance);

/// {D, gamma, decision}.
nlohmann::json to_json(const DominatingSetResult& result);

} // namespace cbn
