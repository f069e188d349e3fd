#include "cbn/reduction.hpp"

#include <algorithm>
#include <sstream>

namespace cbn {

std::string ReductionInstance::node_label(VarIndex i) const {
    if (is_vertex_node(i)) return "V" + std::to_string(std::size_t{vertex_of(i)} + 1);
    const auto [u, v] = source.edges()[i];
    return "E" + std::to_string(std::size_t{u} + 1) + "_" + std::to_string(std::size_t{v} + 1);
}

LayerTags ReductionInstance::layers() const {
    LayerTags tags;
    for (VarIndex i = 0; i < network.size(); ++i) {
        (is_vertex_node(i) ? tags.layer3 : tags.layer2).push_back(i);
    }
    return tags;
}

ReductionInstance build_reduction(const UndirectedGraph& g) {
    if (g.num_edges() == 0) throw MalformedGraph("reduction needs at least one edge");
    for (Vertex v = 0; v < g.num_vertices(); ++v) {
        if (g.is_isolated(v)) {
            throw MalformedGraph(vertex_name(v) +
                                 " is isolated; its vertex-node would have a constant update");
        }
    }
    const std::size_t m = g.num_edges();
    std::vector<std::vector<VarIndex>> sets(m + g.num_vertices());
    const auto edges = g.edges();
    for (std::size_t e = 0; e < m; ++e) {
        const auto node = static_cast<VarIndex>(e);
        sets[e].push_back(node);
        sets[m + edges[e].first].push_back(node);
        sets[m + edges[e].second].push_back(node);
    }
    return ReductionInstance{g, Cbn(std::move(sets))};
}

std::string serialize_reduction(const ReductionInstance& instance) {
    std::ostringstream os;
    os << "# dominating-set reduction: " << instance.source.num_vertices() << " vertices, "
       << instance.source.num_edges() << " edges\n";
    for (VarIndex i = 0; i < instance.network.size(); ++i) {
        os << "# " << var_name(i) << " : " << instance.node_label(i) << '\n';
    }
    const auto body = serialize_cbn(Cbcn(instance.network));
    std::istringstream lines(body);
    std::string line;
    for (VarIndex i = 0; std::getline(lines, line); ++i) {
        os << line << "  # " << instance.node_label(i) << '\n';
    }
    return os.str();
}

ReductionResult solve_dominating_via_controllability(const UndirectedGraph& g,
                                                     std::optional<std::size_t> k,
                                                     const MinControlOptions& options) {
    const auto instance = build_reduction(g);
    ReductionResult result;
    result.solve = minimal_control_set(instance.network, options);
    result.control_set = result.solve.control_set;
    result.total_controls = result.control_set.size();

    std::size_t edge_nodes = 0;
    for (VarIndex i : result.control_set) {
        if (instance.is_vertex_node(i)) {
            result.dominating_set.push_back(instance.vertex_of(i));
        } else {
            ++edge_nodes;
        }
    }
    if (edge_nodes != instance.num_edge_nodes()) {
        throw std::logic_error("minimum control set misses an edge-node");
    }
    if (!is_dominating_set(g, result.dominating_set)) {
        throw std::logic_error("extracted vertex set does not dominate the source graph");
    }
    result.gamma = result.dominating_set.size();
    if (k) result.decision = result.gamma <= *k;
    return result;
}

bool three_layer_controllable(const Cbcn& net, const LayerTags& layers) {
    const std::size_t n = net.size();
    enum : std::uint8_t { None, Two, Three };
    std::vector<std::uint8_t> layer(n, None);
    for (VarIndex i : layers.layer2) {
        if (i >= n || layer[i] != None) throw LayeringViolation("layer-2 tag invalid for " + var_name(i));
        layer[i] = Two;
    }
    for (VarIndex i : layers.layer3) {
        if (i >= n || layer[i] != None) throw LayeringViolation("layer-3 tag invalid for " + var_name(i));
        layer[i] = Three;
    }

    const DependencyGraph g(net);
    for (VarIndex i = 0; i < n; ++i) {
        if (layer[i] == None) throw LayeringViolation(var_name(i) + " has no layer");
        if (layer[i] == Two && !net.is_controlled(i)) {
            throw LayeringViolation(var_name(i) + " is in layer 2 but has no control input of its own");
        }
        for (NodeId w : g.out_neighbors(i)) {
            if (layer[i] != Two || layer[w] != Three) {
                throw LayeringViolation("arc " + var_name(i) + " -> " + var_name(w) +
                                        " does not go from layer 2 to layer 3");
            }
        }
    }

    for (VarIndex v = 0; v < n; ++v) {
        if (layer[v] != Three || net.is_controlled(v)) continue;
        const auto in = g.in_neighbors(v);
        const bool fed = std::any_of(in.begin(), in.end(), [&](NodeId u) { return g.out_degree(u) == 1; });
        if (!fed) return false;
    }
    return true;
}

} // namespace cbn
