#include "cbn/oracle.hpp"

#include <algorithm>
#include <cstdlib>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace cbn {
namespace {

constexpr std::size_t kHardStateBitLimit = 32;

struct TransitionMasks {
    // For every uncontrolled variable: its bit and the mask of its update set.
    std::vector<std::pair<StateCode, StateCode>> and_terms;
    // Control code -> bits it writes into the next state.
    std::vector<StateCode> control_bits;
};

TransitionMasks make_masks(const Cbcn& net) {
    TransitionMasks m;
    for (VarIndex i = 0; i < net.size(); ++i) {
        if (net.is_controlled(i)) continue;
        StateCode mask = 0;
        for (VarIndex j : net.base().update_set(i)) mask |= StateCode{1} << j;
        m.and_terms.emplace_back(StateCode{1} << i, mask);
    }
    const auto controlled = net.controlled();
    m.control_bits.resize(std::size_t{1} << controlled.size());
    for (std::size_t u = 0; u < m.control_bits.size(); ++u) {
        StateCode bits = 0;
        for (std::size_t c = 0; c < controlled.size(); ++c) {
            if ((u >> c) & 1U) bits |= StateCode{1} << controlled[c];
        }
        m.control_bits[u] = bits;
    }
    return m;
}

inline StateCode free_next(const TransitionMasks& m, StateCode s) {
    StateCode next = 0;
    for (auto [bit, mask] : m.and_terms) {
        if ((s & mask) == mask) next |= bit;
    }
    return next;
}

void fill_rows(const TransitionMasks& m, std::size_t fan_out_log2, std::size_t begin,
               std::size_t end, std::vector<StateCode>& table) {
    for (std::size_t s = begin; s < end; ++s) {
        const StateCode base = free_next(m, static_cast<StateCode>(s));
        const std::size_t row = s << fan_out_log2;
        for (std::size_t u = 0; u < m.control_bits.size(); ++u) table[row + u] = base | m.control_bits[u];
    }
}

void check_state_bits(const Cbcn& net, const OracleLimits& limits) {
    const std::size_t bits = net.size() + net.num_controls();
    if (bits > limits.max_state_bits || net.size() >= kHardStateBitLimit) {
        throw TooLarge("state graph needs n + |I| = " + std::to_string(bits) +
                       " bits, limit is " + std::to_string(limits.max_state_bits) +
                       " (set CBN_CONTROL_MAX_ORACLE_BITS to raise it)");
    }
}

std::vector<std::uint8_t> reach(std::size_t num_states, StateCode root,
                                const std::vector<std::size_t>& offsets,
                                const std::vector<StateCode>& targets) {
    std::vector<std::uint8_t> seen(num_states, 0);
    std::vector<StateCode> queue{root};
    seen[root] = 1;
    for (std::size_t head = 0; head < queue.size(); ++head) {
        const StateCode s = queue[head];
        for (std::size_t k = offsets[s]; k < offsets[s + 1]; ++k) {
            const StateCode t = targets[k];
            if (!seen[t]) {
                seen[t] = 1;
                queue.push_back(t);
            }
        }
    }
    return seen;
}

} // namespace

OracleLimits OracleLimits::from_environment() {
    OracleLimits limits;
    if (const char* env = std::getenv("CBN_CONTROL_MAX_ORACLE_BITS"); env && *env) {
        char* end = nullptr;
        const unsigned long v = std::strtoul(env, &end, 10);
        if (end && *end == '\0') limits.max_state_bits = v;
    }
    return limits;
}

StateGraph::StateGraph(std::size_t num_vars, std::size_t num_controls, std::vector<StateCode> table)
    : num_vars_(num_vars), num_controls_(num_controls), table_(std::move(table)) {
    if (table_.size() != (std::size_t{1} << (num_vars_ + num_controls_))) {
        throw DimensionMismatch("transition table size does not match 2^(n+|I|)");
    }
}

StateGraph state_graph(const Cbcn& net, const OracleLimits& limits, Kernel kernel) {
    check_state_bits(net, limits);
    const auto masks = make_masks(net);
    const std::size_t num_states = std::size_t{1} << net.size();
    const std::size_t log_fan = net.num_controls();
    std::vector<StateCode> table(num_states << log_fan);

    if (kernel == Kernel::Serial) {
        fill_rows(masks, log_fan, 0, num_states, table);
    } else {
        const auto total = static_cast<std::int64_t>(num_states);
#pragma omp parallel for schedule(static)
        for (std::int64_t s = 0; s < total; ++s) {
            fill_rows(masks, log_fan, static_cast<std::size_t>(s), static_cast<std::size_t>(s) + 1, table);
        }
    }
    return StateGraph(net.size(), net.num_controls(), std::move(table));
}

bool strongly_connected(const StateGraph& graph) {
    const std::size_t num_states = graph.num_states();
    const std::size_t fan = graph.fan_out();

    std::vector<std::size_t> fwd_offsets(num_states + 1);
    std::vector<StateCode> fwd_targets;
    fwd_targets.reserve(num_states * fan);
    for (StateCode s = 0; s < num_states; ++s) {
        fwd_offsets[s] = fwd_targets.size();
        for (StateCode t : graph.successors(s)) fwd_targets.push_back(t);
    }
    fwd_offsets[num_states] = fwd_targets.size();
    const auto forward = reach(num_states, 0, fwd_offsets, fwd_targets);
    for (auto b : forward) {
        if (!b) return false;
    }

    // Reverse adjacency in CSR form.
    std::vector<std::size_t> bwd_offsets(num_states + 1, 0);
    for (StateCode t : fwd_targets) ++bwd_offsets[t + 1];
    for (std::size_t s = 0; s < num_states; ++s) bwd_offsets[s + 1] += bwd_offsets[s];
    std::vector<StateCode> bwd_targets(fwd_targets.size());
    std::vector<std::size_t> cursor(bwd_offsets.begin(), bwd_offsets.end() - 1);
    for (StateCode s = 0; s < num_states; ++s) {
        for (StateCode t : graph.successors(s)) bwd_targets[cursor[t]++] = s;
    }
    const auto backward = reach(num_states, 0, bwd_offsets, bwd_targets);
    for (auto b : backward) {
        if (!b) return false;
    }
    return true;
}

bool oracle_controllable(const Cbcn& net, const OracleLimits& limits) {
    return strongly_connected(state_graph(net, limits));
}

std::optional<ControlSequence> shortest_steering(const StateGraph& graph, StateCode a, StateCode b) {
    const std::size_t num_states = graph.num_states();
    if (a >= num_states || b >= num_states) throw DimensionMismatch("state code out of range");
    constexpr StateCode kNone = std::numeric_limits<StateCode>::max();
    std::vector<StateCode> parent(num_states, kNone);
    std::vector<std::uint32_t> via(num_states, 0);
    std::vector<StateCode> queue{a};
    parent[a] = a;
    for (std::size_t head = 0; head < queue.size() && parent[b] == kNone; ++head) {
        const StateCode s = queue[head];
        const auto next = graph.successors(s);
        for (std::uint32_t u = 0; u < next.size(); ++u) {
            const StateCode t = next[u];
            if (parent[t] != kNone) continue;
            parent[t] = s;
            via[t] = u;
            queue.push_back(t);
        }
    }
    if (parent[b] == kNone) return std::nullopt;

    std::vector<std::uint32_t> codes;
    for (StateCode s = b; s != a; s = parent[s]) codes.push_back(via[s]);
    ControlSequence seq(graph.num_controls());
    for (auto it = codes.rbegin(); it != codes.rend(); ++it) {
        seq.push_back(ControlVector::from_integer(*it, graph.num_controls()));
    }
    return seq;
}

std::optional<ControlSequence> shortest_steering(const Cbcn& net, const NetworkState& a,
                                                 const NetworkState& b, const OracleLimits& limits) {
    if (a.size() != net.size() || b.size() != net.size()) {
        throw DimensionMismatch("states must have " + std::to_string(net.size()) + " bits");
    }
    const auto graph = state_graph(net, limits);
    return shortest_steering(graph, static_cast<StateCode>(a.to_integer()),
                             static_cast<StateCode>(b.to_integer()));
}

std::string to_dot(const StateGraph& graph) {
    std::ostringstream os;
    auto name = [&](StateCode s) {
        return "\"" + NetworkState::from_integer(s, graph.num_vars()).to_string() + "\"";
    };
    os << "digraph states {\n";
    for (StateCode s = 0; s < graph.num_states(); ++s) {
        const auto next = graph.successors(s);
        for (std::uint32_t u = 0; u < next.size(); ++u) {
            os << "  " << name(s) << " -> " << name(next[u]);
            if (graph.num_controls() > 0) {
                os << " [label=\"" << ControlVector::from_integer(u, graph.num_controls()).to_string()
                   << "\"]";
            }
            os << ";\n";
        }
    }
    os << "}\n";
    return os.str();
}

DominatingSetResult min_dominating_set(const UndirectedGraph& g, std::optional<std::size_t> k,
                                       const OracleLimits& limits) {
    const std::size_t nv = g.num_vertices();
    if (nv > limits.max_domset_vertices || nv > 63) {
        throw TooLarge("exact dominating-set search limited to " +
                       std::to_string(limits.max_domset_vertices) + " vertices, graph has " +
                       std::to_string(nv));
    }
    if (k && *k > nv) {
        throw std::invalid_argument("budget k = " + std::to_string(*k) + " exceeds |V| = " +
                                    std::to_string(nv));
    }

    using Mask = std::uint64_t;
    const Mask all = nv == 64 ? ~Mask{0} : (Mask{1} << nv) - 1;
    std::vector<Mask> closed(nv);
    Mask forced = 0;
    std::vector<Vertex> candidates;
    for (Vertex v = 0; v < nv; ++v) {
        closed[v] = Mask{1} << v;
        for (Vertex w : g.neighbors(v)) closed[v] |= Mask{1} << w;
        if (g.is_isolated(v)) {
            forced |= Mask{1} << v;
        } else {
            candidates.push_back(v);
        }
    }

    DominatingSetResult result;
    std::vector<std::size_t> pick;
    for (std::size_t size = 0; size <= candidates.size(); ++size) {
        // Lexicographic enumeration of `size`-subsets of the candidate list.
        pick.resize(size);
        for (std::size_t i = 0; i < size; ++i) pick[i] = i;
        while (true) {
            Mask covered = forced;
            for (std::size_t i : pick) covered |= closed[candidates[i]];
            if (covered == all) {
                for (Vertex v = 0; v < nv; ++v) {
                    if ((forced >> v) & 1U) result.vertices.push_back(v);
                }
                for (std::size_t i : pick) result.vertices.push_back(candidates[i]);
                std::sort(result.vertices.begin(), result.vertices.end());
                result.gamma = result.vertices.size();
                if (k) result.decision = result.gamma <= *k;
                return result;
            }
            std::size_t i = size;
            while (i > 0 && pick[i - 1] == candidates.size() - size + i - 1) --i;
            if (i == 0) break;
            ++pick[i - 1];
            for (std::size_t j = i; j < size; ++j) pick[j] = pick[j - 1] + 1;
        }
    }
    throw std::logic_error("no dominating set found");
}

} // namespace cbn
