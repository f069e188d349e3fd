#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "cbn/minctrl.hpp"
#include "cbn/model.hpp"
#include "cbn/undirected_graph.hpp"

namespace cbn {

/// Which variables sit in layer 2 and layer 3 of a three-layer CBCN; layer 1
/// consists of the generators.
struct LayerTags {
    std::vector<VarIndex> layer2;
    std::vector<VarIndex> layer3;
};

/// CBN built from an undirected graph G = (V, E): one edge-node per edge
/// (variables 0..|E|-1, in sorted edge order) with a self-loop and arcs to
/// both endpoints, followed by one vertex-node per vertex (variables
/// |E|..|E|+|V|-1) whose update is the AND of its incident edge-nodes.
struct ReductionInstance {
    UndirectedGraph source;
    Cbn network;

    std::size_t num_edge_nodes() const { return source.num_edges(); }
    VarIndex edge_node(std::size_t edge) const { return static_cast<VarIndex>(edge); }
    VarIndex vertex_node(Vertex v) const { return static_cast<VarIndex>(source.num_edges() + v); }
    bool is_vertex_node(VarIndex i) const { return i >= source.num_edges(); }
    Vertex vertex_of(VarIndex i) const { return static_cast<Vertex>(i - source.num_edges()); }

    /// "E1_3" for the edge-node of {v1, v3}, "V3" for the vertex-node of v3.
    std::string node_label(VarIndex i) const;
    LayerTags layers() const;
};

/// Throws MalformedGraph for graphs without edges or with isolated vertices
/// (an isolated vertex would get a constant update function).
ReductionInstance build_reduction(const UndirectedGraph& g);

/// ".cbn" text of the produced network, annotated with the systematic labels.
std::string serialize_reduction(const ReductionInstance& instance);

struct ReductionResult {
    /// Full minimum control set of the reduction network.
    std::vector<VarIndex> control_set;
    /// Controlled vertex-nodes mapped back to source vertices; a minimum dominating set.
    std::vector<Vertex> dominating_set;
    std::size_t gamma = 0;
    std::size_t total_controls = 0;
    std::optional<bool> decision;
    MinControlResult solve;
};

/// Decides the dominating-set question for `g` by solving minimal
/// controllability on the reduction network. Checks that every edge-node is
/// controlled and that the extracted set dominates `g`.
ReductionResult solve_dominating_via_controllability(const UndirectedGraph& g,
                                                     std::optional<std::size_t> k = std::nullopt,
                                                     const MinControlOptions& options = {});

/// Controllability of a three-layer CBCN whose layer-2 nodes all carry their
/// own control: every uncontrolled layer-3 node needs a layer-2 in-neighbour
/// of out-degree one. Controlled layer-3 nodes are split off together with
/// their generator before the test.
///
/// Throws LayeringViolation when the tags do not describe such a network.
bool three_layer_controllable(const Cbcn& net, const LayerTags& layers);

} // namespace cbn
