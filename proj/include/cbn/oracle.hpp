#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "cbn/kernel.hpp"
#include "cbn/model.hpp"
#include "cbn/synthesis.hpp"
#include "cbn/undirected_graph.hpp"

namespace cbn {

/// Size guards for the brute-force routines.
struct OracleLimits {
    /// Upper bound on n + |I|; the transition table has 2^(n+|I|) entries.
    std::size_t max_state_bits = 20;
    std::size_t max_domset_vertices = 25;

    /// Defaults, with max_state_bits overridden by CBN_CONTROL_MAX_ORACLE_BITS when set.
    static OracleLimits from_environment();
};

/// Integer state code; bit i is X_{i+1}.
using StateCode = std::uint32_t;

/// The full 2^n-state transition graph. Control code u packs the control
/// vector the same way (bit c = c-th controlled variable).
class StateGraph {
public:
    StateGraph(std::size_t num_vars, std::size_t num_controls, std::vector<StateCode> table);

    std::size_t num_vars() const { return num_vars_; }
    std::size_t num_controls() const { return num_controls_; }
    std::size_t num_states() const { return std::size_t{1} << num_vars_; }
    /// Out-degree of every state, 2^|I|.
    std::size_t fan_out() const { return std::size_t{1} << num_controls_; }

    StateCode successor(StateCode s, std::uint32_t u) const { return table_[(std::size_t{s} << num_controls_) | u]; }
    std::span<const StateCode> successors(StateCode s) const {
        return std::span<const StateCode>(table_).subspan(std::size_t{s} << num_controls_, fan_out());
    }

    friend bool operator==(const StateGraph&, const StateGraph&) = default;

private:
    std::size_t num_vars_;
    std::size_t num_controls_;
    std::vector<StateCode> table_;
};

/// Builds the transition table. Both kernels produce identical tables; the
/// parallel one splits the state range across OpenMP threads.
/// Throws TooLarge when n + |I| exceeds the limit.
StateGraph state_graph(const Cbcn& net, const OracleLimits& limits = {},
                       Kernel kernel = Kernel::Parallel);

/// Forward and backward reachability from state 0 both cover every state.
bool strongly_connected(const StateGraph& graph);

bool oracle_controllable(const Cbcn& net, const OracleLimits& limits = {});

/// Breadth-first search; nullopt when `b` is unreachable from `a`.
/// Among shortest sequences, the one using the smallest control codes at the
/// earliest steps is returned.
std::optional<ControlSequence> shortest_steering(const Cbcn& net, const NetworkState& a,
                                                 const NetworkState& b,
                                                 const OracleLimits& limits = {});

/// Same search on a prebuilt graph.
std::optional<ControlSequence> shortest_steering(const StateGraph& graph, StateCode a, StateCode b);

/// States rendered as bit strings (X1 first), arcs labelled with the control bits.
std::string to_dot(const StateGraph& graph);

struct DominatingSetResult {
    /// Lexicographically smallest minimum dominating set, ascending.
    std::vector<Vertex> vertices;
    std::size_t gamma = 0;
    /// gamma <= k, present when a budget was given.
    std::optional<bool> decision;
};

/// Exact search by increasing cardinality; isolated vertices are always included.
/// Throws TooLarge beyond limits.max_domset_vertices, std::invalid_argument if k > |V|.
DominatingSetResult min_dominating_set(const UndirectedGraph& g,
                                       std::optional<std::size_t> k = std::nullopt,
                                       const OracleLimits& limits = {});

} // namespace cbn
