#include <gtest/gtest.h>

#include <functional>
#include <stdexcept>

#include "ambt/builders.hpp"
#include "ambt/matching.hpp"
#include "ambt/oracles.hpp"
#include "catalog.hpp"

namespace ambt {
namespace {

// Vertex k of the 1-based examples is id k-1 here.
const Matching kP4Ends{{0, 1}, {2, 3}};

TEST(Matching, NormalisesPairs) {
    Matching m{{3, 1}, {0, 2}};
    EXPECT_EQ(m.pairs(), (std::vector<VertexPair>{{0, 2}, {1, 3}}));
    EXPECT_TRUE(m.contains(2, 0));
    EXPECT_EQ(m.saturated(), (std::vector<VertexId>{0, 1, 2, 3}));
    EXPECT_THROW(m.add(4, 4), std::invalid_argument);
}

TEST(IsMatching, Basics) {
    EXPECT_TRUE(is_matching(cycle_graph(4), kP4Ends));
    EXPECT_FALSE(is_matching(cycle_graph(4), Matching{{0, 1}, {1, 2}}));
    EXPECT_FALSE(is_matching(path_graph(4), Matching{{0, 2}}));
    EXPECT_FALSE(is_matching(path_graph(4), Matching{{0, 9}}));
}

TEST(Verifiers, RejectNonMatchings) {
    Matching bad{{0, 2}};
    MultiGraph p4 = path_graph(4);
    EXPECT_THROW(is_acyclic_matching(p4, bad), std::invalid_argument);
    EXPECT_THROW(is_induced_matching(p4, bad), std::invalid_argument);
    EXPECT_THROW(has_alternating_cycle(p4, bad), std::invalid_argument);
    EXPECT_THROW(is_ur_matching(p4, bad), std::invalid_argument);
}

TEST(IsAcyclicMatching, Examples) {
    EXPECT_FALSE(is_acyclic_matching(cycle_graph(4), kP4Ends));
    EXPECT_TRUE(is_acyclic_matching(path_graph(4), kP4Ends));
    EXPECT_TRUE(is_acyclic_matching(complete_graph(5), Matching{{1, 3}}));
}

TEST(IsInducedMatching, Examples) {
    EXPECT_TRUE(is_induced_matching(cycle_graph(6), Matching{{0, 1}, {3, 4}}));
    EXPECT_FALSE(is_induced_matching(path_graph(4), kP4Ends));
    EXPECT_TRUE(is_induced_matching(path_graph(2), Matching{{0, 1}}));
}

TEST(HasAlternatingCycle, Examples) {
    EXPECT_TRUE(has_alternating_cycle(cycle_graph(4), kP4Ends));
    EXPECT_FALSE(has_alternating_cycle(path_graph(4), kP4Ends));
    EXPECT_FALSE(has_alternating_cycle(path_graph(2), Matching{{0, 1}}));
}

TEST(HasAlternatingCycle, ParallelCopyOfMatchedEdge) {
    MultiGraph g(2);
    g.add_edge(0, 1);
    g.add_edge(0, 1);
    EXPECT_TRUE(has_alternating_cycle(g, Matching{{0, 1}}));
}

TEST(IsUrMatching, Examples) {
    EXPECT_FALSE(is_ur_matching(complete_graph(4), Matching{{0, 1}, {2, 3}}));
    EXPECT_TRUE(is_ur_matching(path_graph(4), kP4Ends));
    EXPECT_TRUE(is_ur_matching(cycle_graph(5), Matching{}));
}

TEST(HasAlternatingCycle, NeedsBlossomHandling) {
    // Odd cycles inside G[V_M]: a triangle with pendant path and a 5-cycle
    // with a chord. Expected values come from perfect-matching counts.
    MultiGraph g = graph_from_edges(6, {{0, 1}, {1, 2}, {2, 0}, {2, 3}, {3, 4}, {4, 5}, {5, 0}});
    EXPECT_TRUE(has_alternating_cycle(g, Matching{{0, 1}, {2, 3}, {4, 5}}));
    MultiGraph h = graph_from_edges(6, {{0, 1}, {1, 2}, {2, 0}, {2, 3}, {3, 4}, {4, 5}});
    EXPECT_FALSE(has_alternating_cycle(h, Matching{{0, 1}, {2, 3}, {4, 5}}));
}

TEST(AcyclicToIndependent, Examples) {
    auto p4 = acyclic_to_independent(path_graph(4), kP4Ends);
    EXPECT_EQ(p4.vertices, (std::vector<VertexId>{0, 2}));
    EXPECT_EQ(p4.source, IndependentSetCert::Source::Acyclic);

    auto edge = acyclic_to_independent(path_graph(2), Matching{{0, 1}});
    EXPECT_EQ(edge.vertices, std::vector<VertexId>{0});

    MultiGraph two = graph_from_edges(4, {{0, 1}, {2, 3}});
    auto both = acyclic_to_independent(two, Matching{{0, 1}, {2, 3}});
    EXPECT_EQ(both.vertices.size(), 2u);
    EXPECT_TRUE(is_independent_set(two, both.vertices));

    EXPECT_THROW(acyclic_to_independent(cycle_graph(4), kP4Ends), std::invalid_argument);
}

TEST(UrToIndependent, Examples) {
    auto single = ur_to_independent(path_graph(2), Matching{{0, 1}});
    EXPECT_GE(single.vertices.size(), 1u);

    MultiGraph p4 = path_graph(4);
    auto four = ur_to_independent(p4, kP4Ends);
    EXPECT_EQ(four.vertices.size(), 2u);
    EXPECT_TRUE(is_independent_set(p4, four.vertices));
    EXPECT_EQ(four.source, IndependentSetCert::Source::UniquelyRestricted);

    MultiGraph p6 = path_graph(6);
    Matching alt{{0, 1}, {2, 3}, {4, 5}};
    auto six = ur_to_independent(p6, alt);
    EXPECT_GE(six.vertices.size(), 2u);
    EXPECT_TRUE(is_independent_set(p6, six.vertices));
    EXPECT_LE(static_cast<std::int64_t>(six.vertices.size()), max_independent_set(induced_subgraph(p6, alt.saturated())).optimum);

    EXPECT_THROW(ur_to_independent(complete_graph(4), Matching{{0, 1}, {2, 3}}), std::invalid_argument);
}

TEST(CheckDistanceProperty, Examples) {
    MultiGraph c4 = cycle_graph(4);
    EXPECT_TRUE(check_distance_property(c4, kP4Ends, 1));
    EXPECT_TRUE(check_distance_property(star_graph(3), Matching{{0, 1}}, 1));
    EXPECT_FALSE(check_distance_property(path_graph(5), Matching{{0, 1}}, 1));
    EXPECT_TRUE(check_distance_property(path_graph(4), Matching{{0, 1}}, 2));
}

TEST(MatchingClasses, ChainOnAllSmallGraphs) {
    for (const auto& sg : testing::graphs_up_to(7)) {
        MultiGraph g = sg.to_graph();
        for_each_restricted_matching(g, MatchingKind::Induced, [&](const Matching& m) {
            ASSERT_TRUE(is_induced_matching(g, m));
            ASSERT_TRUE(is_acyclic_matching(g, m));
        });
        for_each_restricted_matching(g, MatchingKind::Acyclic, [&](const Matching& m) { ASSERT_TRUE(is_ur_matching(g, m)); });
    }
}

/// Perfect matchings of a small simple graph, by recursion on the lowest vertex.
int count_perfect_matchings(const MultiGraph& g, std::vector<VertexId> rest) {
    if (rest.empty()) return 1;
    VertexId v = rest.front();
    int total = 0;
    for (std::size_t i = 1; i < rest.size(); ++i) {
        if (!g.adjacent(v, rest[i])) continue;
        std::vector<VertexId> next;
        for (std::size_t j = 1; j < rest.size(); ++j)
            if (j != i) next.push_back(rest[j]);
        total += count_perfect_matchings(g, next);
    }
    return total;
}

/// Every matching of g, by include/exclude over the edge list.
std::vector<Matching> all_matchings(const MultiGraph& g) {
    const auto edges = g.edges();
    std::vector<Matching> all;
    std::vector<char> used(g.vertex_id_bound(), 0);
    Matching cur;
    std::function<void(std::size_t)> rec = [&](std::size_t i) {
        if (i == edges.size()) {
            all.push_back(cur);
            return;
        }
        rec(i + 1);
        const Edge& e = g.edge(edges[i]);
        if (used[e.a] || used[e.b]) return;
        used[e.a] = used[e.b] = 1;
        Matching saved = cur;
        cur.add(e.a, e.b);
        rec(i + 1);
        cur = saved;
        used[e.a] = used[e.b] = 0;
    };
    rec(0);
    return all;
}

void expect_agreement(const MultiGraph& g) {
    for (const Matching& m : all_matchings(g)) {
        const bool expected = count_perfect_matchings(g, m.saturated()) >= 2;
        ASSERT_EQ(has_alternating_cycle(g, m), expected);
    }
}

TEST(HasAlternatingCycle, AgreesWithPerfectMatchingCount) {
    for (const auto& sg : testing::graphs_up_to(7)) expect_agreement(sg.to_graph());
}

TEST(HasAlternatingCycle, AgreesWithPerfectMatchingCountOnRandomGraphs) {
    Rng rng(20240611);
    for (int round = 0; round < 150; ++round) {
        const std::size_t n = 8 + rng.below(3);
        expect_agreement(random_graph(n, 0.2 + 0.3 * rng.unit(), rng));
    }
}

}  // namespace
}  // namespace ambt
