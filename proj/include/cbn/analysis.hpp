#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "cbn/model.hpp"

namespace cbn {

struct DagResult {
    bool acyclic = false;
    /// Topological order of every node (Kahn, FIFO, sources in ascending id order). Empty on a cycle.
    std::vector<NodeId> order;
    /// Witness cycle, first node repeated at the end. Empty when acyclic.
    std::vector<NodeId> cycle;
};

/// On a cycle, the witness is the first back edge met by a depth-first
/// traversal rooted at the lowest ids with out-neighbours visited in ascending order.
DagResult is_dag(const DependencyGraph& g);

struct PropertyPResult {
    bool holds = false;
    /// Lowest-id simple node with neither a generator nor a channel among its in-neighbours.
    std::optional<NodeId> witness;
};

PropertyPResult has_property_p(const DependencyGraph& g);

enum class VerdictReason { Ok, NotDag, PropertyPViolation };

const char* to_string(VerdictReason reason);

struct ControllabilityVerdict {
    bool controllable = false;
    VerdictReason reason = VerdictReason::Ok;
    /// Set when reason == NotDag.
    std::vector<NodeId> cycle;
    /// Set when reason == PropertyPViolation.
    std::optional<NodeId> violating_node;

    /// "controllable", "not controllable: cycle X1->X2->X1", ...
    std::string describe(const DependencyGraph& g) const;
};

/// Controllable iff the dependency graph is a DAG and every simple node has a
/// generator or a channel among its in-neighbours. Linear in the size of the
/// network description.
ControllabilityVerdict check_controllability(const DependencyGraph& g);
ControllabilityVerdict check_controllability(const Cbcn& net);

/// Generator followed by simple nodes, each the unique out-neighbour of its predecessor.
struct ControlledPath {
    std::vector<NodeId> nodes;

    NodeId generator() const { return nodes.front(); }
    std::size_t simple_count() const { return nodes.size() - 1; }

    friend bool operator==(const ControlledPath&, const ControlledPath&) = default;
};

using PathDecomposition = std::vector<ControlledPath>;

/// Splits every node of a controllable CBCN's dependency graph into disjoint
/// controlled paths. Unassigned simple nodes are processed in ascending id
/// order and ties pick the lowest-id channel (else generator). Paths are
/// returned in creation order.
///
/// Throws NotControllable when the graph is cyclic or violates Property P.
PathDecomposition decompose_controlled_paths(const DependencyGraph& g);

/// "U1 -> X1 -> X3"
std::string format_path(const ControlledPath& path, const DependencyGraph& g);

struct DepthMap {
    /// Indexed by node id (size id_bound()); 0 for generators and absent ids.
    std::vector<std::size_t> depth;
    /// Maximum depth over simple nodes.
    std::size_t tau = 0;
};

/// depth(generator) = 0, depth(v) = 1 + max depth of in-neighbours.
/// Under all-ones controls every node holds 1 from time depth(v) on.
/// Throws NotDag.
DepthMap fill_depth(const DependencyGraph& g);

} // namespace cbn
