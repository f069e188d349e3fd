#include "cbn/analysis.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

namespace cbn {
namespace {

std::vector<NodeId> find_cycle(const DependencyGraph& g) {
    enum : std::uint8_t { White, Gray, Black };
    const NodeId bound = g.id_bound();
    std::vector<std::uint8_t> color(bound, White);
    // (node, index of next out-neighbour to visit)
    std::vector<std::pair<NodeId, std::size_t>> stack;
    std::vector<std::size_t> stack_pos(bound, 0);

    for (NodeId root = 0; root < bound; ++root) {
        if (!g.contains(root) || color[root] != White) continue;
        stack.emplace_back(root, 0);
        color[root] = Gray;
        stack_pos[root] = 0;
        while (!stack.empty()) {
            auto& [u, next] = stack.back();
            const auto out = g.out_neighbors(u);
            if (next == out.size()) {
                color[u] = Black;
                stack.pop_back();
                continue;
            }
            const NodeId w = out[next++];
            if (color[w] == Gray) {
                std::vector<NodeId> cycle;
                for (std::size_t k = stack_pos[w]; k < stack.size(); ++k) cycle.push_back(stack[k].first);
                cycle.push_back(w);
                return cycle;
            }
            if (color[w] == White) {
                color[w] = Gray;
                stack_pos[w] = stack.size();
                stack.emplace_back(w, 0);
            }
        }
    }
    return {};
}

} // namespace

DagResult is_dag(const DependencyGraph& g) {
    const NodeId bound = g.id_bound();
    std::vector<std::size_t> indegree(bound, 0);
    std::vector<NodeId> order;
    order.reserve(g.num_nodes());
    for (NodeId v = 0; v < bound; ++v) {
        if (!g.contains(v)) continue;
        indegree[v] = g.in_degree(v);
        if (indegree[v] == 0) order.push_back(v);
    }
    // `order` doubles as the FIFO queue.
    for (std::size_t head = 0; head < order.size(); ++head) {
        for (NodeId w : g.out_neighbors(order[head])) {
            if (--indegree[w] == 0) order.push_back(w);
        }
    }

    DagResult result;
    if (order.size() == g.num_nodes()) {
        result.acyclic = true;
        result.order = std::move(order);
    } else {
        result.cycle = find_cycle(g);
    }
    return result;
}

PropertyPResult has_property_p(const DependencyGraph& g) {
    const std::size_t n = g.num_vars();
    std::vector<std::uint8_t> marked(n, 0);
    for (NodeId v = 0; v < g.id_bound(); ++v) {
        if (g.contains(v) && g.feeds_uniquely(v)) marked[g.out_neighbors(v).front()] = 1;
    }
    for (NodeId v = 0; v < n; ++v) {
        if (!marked[v]) return {false, v};
    }
    return {true, std::nullopt};
}

const char* to_string(VerdictReason reason) {
    switch (reason) {
    case VerdictReason::Ok: return "OK";
    case VerdictReason::NotDag: return "NotDAG";
    case VerdictReason::PropertyPViolation: return "PropertyPViolation";
    }
    return "unknown";
}

std::string ControllabilityVerdict::describe(const DependencyGraph& g) const {
    switch (reason) {
    case VerdictReason::Ok: return "controllable";
    case VerdictReason::NotDag: {
        std::string s = "not controllable: cycle ";
        for (std::size_t k = 0; k < cycle.size(); ++k) {
            if (k) s += "->";
            s += g.node_name(cycle[k]);
        }
        return s;
    }
    case VerdictReason::PropertyPViolation:
        return "not controllable: " + g.node_name(*violating_node) +
               " has no generator or channel in-neighbour";
    }
    return {};
}

ControllabilityVerdict check_controllability(const DependencyGraph& g) {
    ControllabilityVerdict verdict;
    auto dag = is_dag(g);
    if (!dag.acyclic) {
        verdict.reason = VerdictReason::NotDag;
        verdict.cycle = std::move(dag.cycle);
        return verdict;
    }
    const auto p = has_property_p(g);
    if (!p.holds) {
        verdict.reason = VerdictReason::PropertyPViolation;
        verdict.violating_node = p.witness;
        return verdict;
    }
    verdict.controllable = true;
    return verdict;
}

ControllabilityVerdict check_controllability(const Cbcn& net) {
    return check_controllability(DependencyGraph(net));
}

PathDecomposition decompose_controlled_paths(const DependencyGraph& g) {
    if (const auto verdict = check_controllability(g); !verdict.controllable) {
        throw NotControllable("cannot decompose into controlled paths: " + verdict.describe(g));
    }

    constexpr std::size_t kUnassigned = static_cast<std::size_t>(-1);
    PathDecomposition paths;
    std::vector<std::size_t> path_of(g.id_bound(), kUnassigned);

    auto assign = [&](std::size_t p, NodeId v) {
        path_of[v] = p;
        paths[p].nodes.push_back(v);
    };

    for (NodeId v = 0; v < g.num_vars(); ++v) {
        if (path_of[v] != kUnassigned) continue;
        // Nodes collected walking backwards from v; chain.back() is the current head.
        std::vector<NodeId> chain{v};
        while (true) {
            const NodeId cnode = chain.back();
            const auto in = g.in_neighbors(cnode);
            // In-lists are ascending and simple ids precede generator ids, so
            // the first match is the lowest-id channel.
            auto pick = std::find_if(in.begin(), in.end(),
                                     [&](NodeId u) { return g.is_simple(u) && g.feeds_uniquely(u); });
            if (pick == in.end()) {
                pick = std::find_if(in.begin(), in.end(), [&](NodeId u) { return g.is_generator(u); });
            }
            if (pick == in.end()) {
                throw NotControllable(g.node_name(cnode) + " has no generator or channel in-neighbour");
            }
            const NodeId u = *pick;
            if (path_of[u] == kUnassigned) {
                chain.push_back(u);
                if (g.is_generator(u)) {
                    paths.emplace_back();
                    for (auto it = chain.rbegin(); it != chain.rend(); ++it) assign(paths.size() - 1, *it);
                    break;
                }
                continue;
            }
            // u's only out-neighbour is cnode, which is unassigned, so u ends its path.
            const std::size_t h = path_of[u];
            if (paths[h].nodes.back() != u) {
                throw std::logic_error("controlled-path merge target is not the tail of its path");
            }
            for (auto it = chain.rbegin(); it != chain.rend(); ++it) assign(h, *it);
            break;
        }
    }
    return paths;
}

std::string format_path(const ControlledPath& path, const DependencyGraph& g) {
    std::string s;
    for (std::size_t k = 0; k < path.nodes.size(); ++k) {
        if (k) s += " -> ";
        s += g.node_name(path.nodes[k]);
    }
    return s;
}

DepthMap fill_depth(const DependencyGraph& g) {
    const auto dag = is_dag(g);
    if (!dag.acyclic) throw NotDag("fill depth is undefined on a cyclic dependency graph");
    DepthMap map;
    map.depth.assign(g.id_bound(), 0);
    for (NodeId v : dag.order) {
        std::size_t d = 0;
        for (NodeId u : g.in_neighbors(v)) d = std::max(d, map.depth[u] + 1);
        map.depth[v] = d;
        if (g.is_simple(v)) map.tau = std::max(map.tau, d);
    }
    return map;
}

} // namespace cbn
