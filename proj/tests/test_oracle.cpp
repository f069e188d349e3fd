#include <cstdlib>
#include <random>
#include <stdexcept>

#include <gtest/gtest.h>

#include "cbn/oracle.hpp"
#include "support/brute_force.hpp"
#include "support/sweep.hpp"

namespace cbn {
namespace {

const char* kEq5 = "X1 = ?\nX2 = ?\nX3 = X1 & X2\n";

UndirectedGraph fig_one() { return UndirectedGraph(4, {{0, 2}, {1, 2}, {2, 3}}); }

UndirectedGraph petersen() {
    std::vector<std::pair<Vertex, Vertex>> e;
    for (Vertex i = 0; i < 5; ++i) {
        e.emplace_back(i, (i + 1) % 5);
        e.emplace_back(i, i + 5);
        e.emplace_back(i + 5, (i + 2) % 5 + 5);
    }
    return UndirectedGraph(10, e);
}

UndirectedGraph random_graph(std::mt19937& rng, std::size_t nv, double p) {
    std::vector<std::pair<Vertex, Vertex>> e;
    for (Vertex u = 0; u < nv; ++u) {
        for (Vertex v = u + 1; v < nv; ++v) {
            if (std::uniform_real_distribution<>(0, 1)(rng) < p) e.emplace_back(u, v);
        }
    }
    return UndirectedGraph(nv, e);
}

TEST(StateGraph, ExampleOneTable) {
    const auto g = state_graph(parse_cbn("X1 = X2\nX2 = X1 & X2\n"));
    EXPECT_EQ(g.fan_out(), 1u);
    EXPECT_EQ(g.num_states(), 4u);
    EXPECT_EQ(g.successor(0, 0), 0u);
    EXPECT_EQ(g.successor(1, 0), 0u);
    EXPECT_EQ(g.successor(2, 0), 1u);
    EXPECT_EQ(g.successor(3, 0), 3u);
}

TEST(StateGraph, KernelsAgreeAndMatchStep) {
    for (std::size_t n = 1; n <= 3; ++n) {
        for (std::uint64_t idx = 0; idx < testing::cbcn_count(n); ++idx) {
            const auto net = testing::cbcn_at(n, idx);
            const auto serial = state_graph(net, {}, Kernel::Serial);
            ASSERT_EQ(serial, state_graph(net, {}, Kernel::Parallel));
            for (StateCode s = 0; s < serial.num_states(); ++s) {
                for (std::uint32_t u = 0; u < serial.fan_out(); ++u) {
                    const auto next = testing::reference_step(net, testing::bits_of(s, n),
                                                              testing::bits_of(u, net.num_controls()));
                    ASSERT_EQ(serial.successor(s, u), testing::value_of(next));
                }
            }
        }
    }
}

TEST(StateGraph, LargerRandomNetworkKernelsAgree) {
    std::mt19937 rng(11);
    for (int trial = 0; trial < 5; ++trial) {
        const std::size_t n = 12;
        std::vector<std::vector<VarIndex>> sets(n);
        for (auto& s : sets) {
            for (int d = 0; d < 3; ++d) s.push_back(static_cast<VarIndex>(rng() % n));
        }
        const Cbcn net(Cbn(sets), {0, 5, 9});
        EXPECT_EQ(state_graph(net, {}, Kernel::Serial), state_graph(net, {}, Kernel::Parallel));
    }
}

TEST(StateGraph, SizeGuard) {
    const Cbcn net(Cbn(std::vector<std::vector<VarIndex>>(6, {0})), {0, 1});
    OracleLimits tight;
    tight.max_state_bits = 7;
    EXPECT_THROW(state_graph(net, tight), TooLarge);
    tight.max_state_bits = 8;
    EXPECT_NO_THROW(state_graph(net, tight));
}

TEST(StateGraph, EnvironmentOverride) {
    ::setenv("CBN_CONTROL_MAX_ORACLE_BITS", "9", 1);
    EXPECT_EQ(OracleLimits::from_environment().max_state_bits, 9u);
    ::unsetenv("CBN_CONTROL_MAX_ORACLE_BITS");
    EXPECT_EQ(OracleLimits::from_environment().max_state_bits, OracleLimits{}.max_state_bits);
}

TEST(OracleControllable, Examples) {
    EXPECT_TRUE(oracle_controllable(parse_cbn(kEq5)));
    EXPECT_TRUE(oracle_controllable(parse_cbn("X1 = X2\nX2 = ?\n")));
    EXPECT_FALSE(oracle_controllable(parse_cbn("X1 = X2\nX2 = X1 & X2\n")));
    EXPECT_FALSE(oracle_controllable(parse_cbn("X1 = ?\nX2 = X1\nX3 = X1\n")));
}

TEST(OracleControllable, AgreesWithTransitiveClosure) {
    for (std::size_t n = 1; n <= 3; ++n) {
        for (std::uint64_t idx = 0; idx < testing::cbcn_count(n); ++idx) {
            const auto net = testing::cbcn_at(n, idx);
            ASSERT_EQ(oracle_controllable(net), testing::reference_controllable(net)) << serialize_cbn(net);
        }
    }
}

TEST(ShortestSteering, Examples) {
    const auto net = parse_cbn("X1 = X2\nX2 = ?\n");
    const auto seq = shortest_steering(net, NetworkState::from_string("00"), NetworkState::from_string("11"));
    ASSERT_TRUE(seq.has_value());
    ASSERT_EQ(seq->horizon(), 2u);
    EXPECT_EQ(seq->column(0), (std::vector<bool>{true, true}));

    const auto same = shortest_steering(net, NetworkState::from_string("10"), NetworkState::from_string("10"));
    ASSERT_TRUE(same.has_value());
    EXPECT_EQ(same->horizon(), 0u);

    const auto free = parse_cbn("X1 = X2\nX2 = X1 & X2\n");
    EXPECT_FALSE(shortest_steering(free, NetworkState::from_string("00"), NetworkState::from_string("11")));
    EXPECT_THROW(shortest_steering(net, NetworkState::from_string("0"), NetworkState::from_string("11")),
                 DimensionMismatch);
}

TEST(ShortestSteering, ReachesTargetOverSweep) {
    for (std::uint64_t idx = 0; idx < testing::cbcn_count(2); ++idx) {
        const auto net = testing::cbcn_at(2, idx);
        const auto graph = state_graph(net);
        for (StateCode a = 0; a < 4; ++a) {
            for (StateCode b = 0; b < 4; ++b) {
                const auto seq = shortest_steering(graph, a, b);
                if (!seq) continue;
                const auto end = simulate(net, NetworkState::from_integer(a, 2), *seq).back();
                ASSERT_EQ(end.to_integer(), b);
            }
        }
    }
}

TEST(StateGraphDot, ListsStatesAndLabels) {
    const auto dot = to_dot(state_graph(parse_cbn("X1 = ?\n")));
    EXPECT_NE(dot.find("\"0\" -> \"1\""), std::string::npos);
    EXPECT_NE(dot.find("digraph"), std::string::npos);
}

TEST(DominatingSet, Examples) {
    const auto fig = min_dominating_set(fig_one(), 1);
    EXPECT_EQ(fig.vertices, (std::vector<Vertex>{2}));
    EXPECT_EQ(fig.gamma, 1u);
    EXPECT_EQ(fig.decision, true);
    EXPECT_EQ(min_dominating_set(fig_one(), 0).decision, false);

    const auto k3 = min_dominating_set(UndirectedGraph(3, {{0, 1}, {1, 2}, {0, 2}}));
    EXPECT_EQ(k3.vertices, (std::vector<Vertex>{0}));
    EXPECT_FALSE(k3.decision.has_value());

    const auto p = min_dominating_set(petersen());
    EXPECT_EQ(p.gamma, 3u);
    EXPECT_EQ(testing::reference_domination_number(petersen()), 3u);
    EXPECT_TRUE(is_dominating_set(petersen(), p.vertices));
}

TEST(DominatingSet, IsolatedVerticesAreForced) {
    const auto r = min_dominating_set(UndirectedGraph(4, {{0, 1}}));
    EXPECT_EQ(r.vertices, (std::vector<Vertex>{0, 2, 3}));
    EXPECT_EQ(min_dominating_set(UndirectedGraph(2, {})).gamma, 2u);
}

TEST(DominatingSet, Guards) {
    EXPECT_THROW(min_dominating_set(fig_one(), 5), std::invalid_argument);
    OracleLimits tight;
    tight.max_domset_vertices = 3;
    EXPECT_THROW(min_dominating_set(fig_one(), std::nullopt, tight), TooLarge);
}

TEST(DominatingSet, MinimumAgainstReference) {
    std::mt19937 rng(3);
    for (int trial = 0; trial < 60; ++trial) {
        const auto g = random_graph(rng, 2 + rng() % 11, 0.3);
        const auto r = min_dominating_set(g);
        ASSERT_TRUE(is_dominating_set(g, r.vertices));
        ASSERT_EQ(r.gamma, r.vertices.size());
        ASSERT_EQ(r.gamma, testing::reference_domination_number(g)) << serialize_edge_list(g);
    }
}

TEST(UndirectedGraph, ParseAndValidate) {
    const auto g = parse_edge_list("c figure\np 4 3\n1 3\n2 3\n# comment\n3 4\n");
    EXPECT_EQ(g.num_vertices(), 4u);
    EXPECT_EQ(g.num_edges(), 3u);
    EXPECT_EQ(parse_edge_list(serialize_edge_list(g)).edges().size(), 3u);
    EXPECT_EQ(vertex_name(2), "v3");
    EXPECT_THROW(parse_edge_list("1 2\n"), MalformedGraph);
    EXPECT_THROW(parse_edge_list("p 2 1\n1 3\n"), MalformedGraph);
    EXPECT_THROW(parse_edge_list("p 2 2\n1 2\n"), MalformedGraph);
    EXPECT_THROW(parse_edge_list("p 2 1\n1 1\n"), MalformedGraph);
    EXPECT_THROW(UndirectedGraph(3, {{0, 1}, {1, 0}}), MalformedGraph);
    EXPECT_TRUE(g.is_isolated(0) == false);
}

} // namespace
} // namespace cbn
