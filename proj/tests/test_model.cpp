#include <random>
#include <set>

#include <gtest/gtest.h>

#include "cbn/model.hpp"
#include "cbn/synthesis.hpp"
#include "support/sweep.hpp"

namespace cbn {
namespace {

std::vector<VarIndex> set_of(const Cbcn& net, VarIndex i) {
    const auto s = net.base().update_set(i);
    return {s.begin(), s.end()};
}

std::set<Arc> arc_set(const DependencyGraph& g) {
    const auto arcs = g.arcs();
    return {arcs.begin(), arcs.end()};
}

TEST(ParseCbn, ExampleOneNetwork) {
    const auto net = parse_cbn("X1 = X2\nX2 = X1 & X2\n");
    ASSERT_EQ(net.size(), 2u);
    EXPECT_EQ(net.num_controls(), 0u);
    EXPECT_EQ(set_of(net, 0), (std::vector<VarIndex>{1}));
    EXPECT_EQ(set_of(net, 1), (std::vector<VarIndex>{0, 1}));
}

TEST(ParseCbn, ControlledMarker) {
    const auto net = parse_cbn("X1 = X2\nX2 = ?\n");
    EXPECT_EQ(std::vector<VarIndex>(net.controlled().begin(), net.controlled().end()),
              (std::vector<VarIndex>{1}));
    EXPECT_TRUE(net.is_controlled(1));
    EXPECT_FALSE(net.is_controlled(0));
}

TEST(ParseCbn, CommentsBlankLinesAnyOrderAndDuplicatesInRhs) {
    const auto net = parse_cbn("# header\n\nX2 = X1 & X1   # dup\n  X1=X2&X2\n");
    EXPECT_EQ(set_of(net, 0), (std::vector<VarIndex>{1}));
    EXPECT_EQ(set_of(net, 1), (std::vector<VarIndex>{0}));
}

ParseErrorKind kind_of(std::string_view text) {
    try {
        parse_cbn(text);
    } catch (const ParseError& e) {
        return e.kind();
    }
    ADD_FAILURE() << "no error for: " << text;
    return ParseErrorKind::Syntax;
}

TEST(ParseCbn, Errors) {
    EXPECT_EQ(kind_of("X1 = 1"), ParseErrorKind::ConstantUpdate);
    EXPECT_EQ(kind_of("X1 ="), ParseErrorKind::ConstantUpdate);
    EXPECT_EQ(kind_of("X1 = X1 & 0"), ParseErrorKind::ConstantUpdate);
    EXPECT_EQ(kind_of("X1 = X3"), ParseErrorKind::IndexOutOfRange);
    EXPECT_EQ(kind_of("X0 = X1"), ParseErrorKind::IndexOutOfRange);
    EXPECT_EQ(kind_of("X1 = X1\nX1 = X1"), ParseErrorKind::DuplicateDefinition);
    EXPECT_EQ(kind_of("X1 = X1\nX3 = X1"), ParseErrorKind::MissingDefinition);
    EXPECT_EQ(kind_of("X1 X2"), ParseErrorKind::Syntax);
    EXPECT_EQ(kind_of("Y1 = X1"), ParseErrorKind::Syntax);
    EXPECT_EQ(kind_of("X1 = X1 & Y"), ParseErrorKind::Syntax);
    EXPECT_EQ(kind_of("X1 = X1 | X1"), ParseErrorKind::MixedOperators);
    EXPECT_EQ(kind_of("# nothing\n"), ParseErrorKind::Empty);
}

TEST(ParseCbn, ErrorCarriesLineNumber) {
    try {
        parse_cbn("X1 = X2\nX2 = 1\n");
        FAIL();
    } catch (const ParseError& e) {
        EXPECT_EQ(e.line(), 2u);
        EXPECT_NE(std::string(e.what()).find("constant"), std::string::npos);
    }
}

TEST(ParseCbn, RoundTripProperty) {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 300; ++trial) {
        const std::size_t n = 1 + rng() % 8;
        std::vector<std::vector<VarIndex>> sets(n);
        std::vector<VarIndex> controlled;
        for (std::size_t i = 0; i < n; ++i) {
            const std::size_t deg = 1 + rng() % 4;
            for (std::size_t d = 0; d < deg; ++d) sets[i].push_back(static_cast<VarIndex>(rng() % n));
            if (rng() % 3 == 0) {
                controlled.push_back(static_cast<VarIndex>(i));
                sets[i] = {static_cast<VarIndex>(i)};
            }
        }
        const Cbcn net(Cbn(sets), controlled);
        EXPECT_EQ(parse_cbn(serialize_cbn(net)), net) << serialize_cbn(net);
    }
}

TEST(DependencyGraph, EqFiveArcs) {
    const DependencyGraph g(parse_cbn("X1 = ?\nX2 = ?\nX3 = X1 & X2\n"));
    // X1=0, X2=1, X3=2, U1=3, U2=4
    EXPECT_EQ(arc_set(g), (std::set<Arc>{{3, 0}, {4, 1}, {0, 2}, {1, 2}}));
    EXPECT_EQ(g.num_nodes(), 5u);
    EXPECT_EQ(g.node_name(3), "U1");
    EXPECT_EQ(g.node_name(2), "X3");
}

TEST(DependencyGraph, ExampleOneArcs) {
    const DependencyGraph g(parse_cbn("X1 = X2\nX2 = X1 & X2\n"));
    EXPECT_EQ(arc_set(g), (std::set<Arc>{{1, 0}, {0, 1}, {1, 1}}));
    EXPECT_TRUE(g.has_self_loop(1));
}

TEST(DependencyGraph, ControlRemovesSelfLoop) {
    const DependencyGraph g(Cbcn(Cbn(testing::UpdateSets{{0}}), {0}));
    EXPECT_EQ(arc_set(g), (std::set<Arc>{{1, 0}}));
    EXPECT_FALSE(g.has_self_loop(0));
}

TEST(DependencyGraph, InvariantsOverSweep) {
    for (std::size_t n = 1; n <= 3; ++n) {
        for (std::uint64_t idx = 0; idx < testing::cbcn_count(n); ++idx) {
            const auto net = testing::cbcn_at(n, idx);
            const DependencyGraph g(net);
            for (NodeId v : g.nodes()) {
                if (g.is_generator(v)) {
                    ASSERT_EQ(g.in_degree(v), 0u);
                    ASSERT_EQ(g.out_degree(v), 1u);
                    ASSERT_EQ(g.out_neighbors(v)[0], g.controlled_var(v));
                    continue;
                }
                ASSERT_GE(g.in_degree(v), 1u);
                if (net.is_controlled(v)) {
                    ASSERT_EQ(g.in_degree(v), 1u);
                    ASSERT_EQ(g.in_neighbors(v)[0], g.generator_of(v));
                } else {
                    ASSERT_EQ(g.in_degree(v), net.base().update_set(v).size());
                }
            }
        }
    }
}

TEST(DependencyGraph, FullyControlledNetworkHasOnlyGeneratorArcs) {
    const auto net = Cbcn(Cbn(testing::UpdateSets{{1, 2}, {0}, {0, 1, 2}}), {0, 1, 2});
    const DependencyGraph g(net);
    for (VarIndex i = 0; i < 3; ++i) {
        ASSERT_EQ(g.in_degree(i), 1u);
        EXPECT_TRUE(g.is_generator(g.in_neighbors(i)[0]));
    }
}

TEST(ClassifyNode, Examples) {
    const DependencyGraph eq5(parse_cbn("X1 = ?\nX2 = ?\nX3 = X1 & X2\n"));
    const auto x2 = classify_node(eq5, 1);
    EXPECT_TRUE(x2.channel);
    EXPECT_TRUE(x2.directly_controlled);
    EXPECT_TRUE(classify_node(eq5, 3).generator);
    EXPECT_EQ(classify_node(eq5, 3).to_string(), "Generator");
    EXPECT_EQ(classify_node(eq5, 2).to_string(), "PlainSimple");

    const DependencyGraph ex1(parse_cbn("X1 = X2\nX2 = X1 & X2\n"));
    EXPECT_TRUE(classify_node(ex1, 1).plain_simple());
    // X1 has out-degree 1 to X2 and no self-loop.
    EXPECT_TRUE(classify_node(ex1, 0).channel);

    EXPECT_THROW(classify_node(ex1, 2), UnknownNode);
    EXPECT_THROW(classify_node(ex1, 99), UnknownNode);
}

TEST(DbnToCbn, SameUpdateSets) {
    const auto net = dbn_to_cbn("X1 = X2 | X3\nX2 = X2\nX3 = X1\n");
    EXPECT_EQ(set_of(net, 0), (std::vector<VarIndex>{1, 2}));
    EXPECT_EQ(set_of(dbn_to_cbn("X1 = X1"), 0), (std::vector<VarIndex>{0}));
}

TEST(DbnToCbn, RejectsMixedOperators) {
    try {
        dbn_to_cbn("X1 = X1 | X2 & X2\nX2 = X1\n");
        FAIL();
    } catch (const ParseError& e) {
        EXPECT_EQ(e.kind(), ParseErrorKind::MixedOperators);
    }
    EXPECT_THROW(dbn_to_cbn("X1 = X1 & X1"), ParseError);
}

std::string dbn_text(const Cbn& cbn) {
    std::string s;
    for (VarIndex i = 0; i < cbn.size(); ++i) {
        s += var_name(i) + " =";
        const auto deps = cbn.update_set(i);
        for (std::size_t k = 0; k < deps.size(); ++k) s += (k ? " | " : " ") + var_name(deps[k]);
        s += '\n';
    }
    return s;
}

// OR-network trajectory from s is the complement of the mapped CBN's trajectory from ~s.
TEST(DbnToCbn, ComplementCorrespondenceBySimulation) {
    for (std::size_t n = 1; n <= 3; ++n) {
        for (std::uint64_t idx = 0; idx < testing::cbn_count(n); ++idx) {
            const Cbn source = testing::cbn_at(n, idx);
            const auto mapped = dbn_to_cbn(dbn_text(source));
            ASSERT_EQ(mapped.base(), source);
            const DependencyGraph a(Cbcn{source}), b(mapped);
            ASSERT_EQ(a.arcs(), b.arcs());

            for (std::uint64_t s = 0; s < (1u << n); ++s) {
                std::vector<bool> or_state(n);
                for (std::size_t i = 0; i < n; ++i) or_state[i] = (s >> i) & 1U;
                NetworkState and_state = NetworkState::from_integer(s, n).complement();
                for (int t = 0; t < 4; ++t) {
                    std::vector<bool> next(n);
                    for (VarIndex i = 0; i < n; ++i) {
                        bool v = false;
                        for (VarIndex j : source.update_set(i)) v = v || or_state[j];
                        next[i] = v;
                    }
                    or_state = next;
                    and_state = step(mapped, and_state, ControlVector(0));
                    for (std::size_t i = 0; i < n; ++i) ASSERT_EQ(or_state[i], !and_state[i]);
                }
            }
        }
    }
}

TEST(NetworkState, LittleEndianConventions) {
    const auto x = NetworkState::from_string("110");
    EXPECT_EQ(x.to_integer(), 3u);
    EXPECT_EQ(NetworkState::from_integer(4, 3).to_string(), "001");
    EXPECT_THROW(NetworkState::from_string("12"), DimensionMismatch);
}

TEST(Dot, GeneratorsAreBoxes) {
    const auto dot = to_dot(DependencyGraph(parse_cbn("X1 = ?\nX2 = X1\n")));
    EXPECT_NE(dot.find("U1 [shape=box]"), std::string::npos);
    EXPECT_NE(dot.find("X1 -> X2"), std::string::npos);
    EXPECT_NE(dot.find("U1 -> X1"), std::string::npos);
}

} // namespace
} // namespace cbn
