#include <gtest/gtest.h>

#include <algorithm>
#include <stdexcept>

#include "ambt/builders.hpp"
#include "ambt/graph.hpp"
#include "catalog.hpp"

namespace ambt {
namespace {

MultiGraph two_triangles_bridged() {
    return graph_from_edges(6, {{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}, {5, 3}, {2, 3}});
}

TEST(Degree, CountsIncidencesWithLoopsTwice) {
    MultiGraph tri = cycle_graph(3);
    for (VertexId v : tri.vertices()) EXPECT_EQ(degree(tri, v), 2u);

    MultiGraph loop(1);
    loop.add_edge(0, 0);
    EXPECT_EQ(degree(loop, 0), 2u);

    MultiGraph lone(1);
    EXPECT_EQ(degree(lone, 0), 0u);
    EXPECT_THROW(degree(lone, 7), std::out_of_range);
}

TEST(HasCycle, ParallelEdgesAndLoopsCount) {
    EXPECT_FALSE(has_cycle(graph_from_edges(5, {{0, 1}, {1, 2}, {1, 3}, {3, 4}})));

    MultiGraph par(2);
    par.add_edge(0, 1);
    par.add_edge(0, 1);
    EXPECT_TRUE(has_cycle(par));

    MultiGraph loop(1);
    loop.add_edge(0, 0);
    EXPECT_TRUE(has_cycle(loop));
}

TEST(IsForest, InducedSubsets) {
    std::vector<VertexId> all{0, 1, 2, 3};
    EXPECT_TRUE(is_forest(path_graph(4), all));
    EXPECT_FALSE(is_forest(cycle_graph(4), all));
    std::vector<VertexId> three{0, 1, 3};
    EXPECT_TRUE(is_forest(cycle_graph(4), three));
}

TEST(Components, SmallCases) {
    EXPECT_TRUE(connected_components(MultiGraph{}).empty());
    auto two = connected_components(graph_from_edges(4, {{0, 1}, {2, 3}}));
    ASSERT_EQ(two.size(), 2u);
    EXPECT_EQ(two[0], (std::vector<VertexId>{0, 1}));
    EXPECT_EQ(two[1], (std::vector<VertexId>{2, 3}));
    auto one = connected_components(cycle_graph(6));
    ASSERT_EQ(one.size(), 1u);
    EXPECT_EQ(one[0].size(), 6u);
}

TEST(Bridges, SmallCases) {
    EXPECT_EQ(bridges(path_graph(4)).size(), 3u);
    EXPECT_TRUE(bridges(cycle_graph(4)).empty());
    MultiGraph g = two_triangles_bridged();
    auto b = bridges(g);
    ASSERT_EQ(b.size(), 1u);
    EXPECT_EQ(g.edge(b[0]).a, 2u);
    EXPECT_EQ(g.edge(b[0]).b, 3u);
}

TEST(Bridges, ParallelAndLoopEdgesNeverQualify) {
    MultiGraph g(3);
    g.add_edge(0, 1);
    g.add_edge(0, 1);
    EdgeId lone = g.add_edge(1, 2);
    g.add_edge(2, 2);
    EXPECT_EQ(bridges(g), std::vector<EdgeId>{lone});
}

TEST(Bridges, MatchesDeletionTestOnAllSmallGraphs) {
    for (const auto& sg : testing::graphs_up_to(7)) {
        MultiGraph g = sg.to_graph();
        const std::size_t base = connected_components(g).size();
        std::vector<EdgeId> expected;
        for (EdgeId e : g.edges()) {
            MultiGraph h = g;
            h.remove_edge(e);
            if (connected_components(h).size() > base) expected.push_back(e);
        }
        ASSERT_EQ(bridges(g), expected);
    }
}

TEST(BipartitionForest, PathsAndEdges) {
    std::vector<VertexId> all{0, 1, 2, 3};
    auto p = bipartition_forest(path_graph(4), all);
    EXPECT_EQ(p.first, (std::vector<VertexId>{0, 2}));
    EXPECT_EQ(p.second, (std::vector<VertexId>{1, 3}));

    std::vector<VertexId> uv{0, 1};
    auto e = bipartition_forest(path_graph(2), uv);
    EXPECT_EQ(e.first, std::vector<VertexId>{0});
    EXPECT_EQ(e.second, std::vector<VertexId>{1});

    auto two = bipartition_forest(graph_from_edges(4, {{0, 1}, {2, 3}}), all);
    EXPECT_EQ(two.first, (std::vector<VertexId>{0, 2}));
    EXPECT_EQ(two.second, (std::vector<VertexId>{1, 3}));

    EXPECT_THROW(bipartition_forest(cycle_graph(4), all), std::invalid_argument);
}

TEST(BipartitionForest, SidesAreIndependentOnSmallForests) {
    for (const auto& sg : testing::graphs_up_to(7)) {
        MultiGraph g = sg.to_graph();
        auto verts = g.vertices();
        if (!is_forest(g, verts)) continue;
        auto parts = bipartition_forest(g, verts);
        EXPECT_EQ(parts.first.size() + parts.second.size(), verts.size());
        for (const auto* side : {&parts.first, &parts.second})
            for (VertexId a : *side)
                for (VertexId b : *side) EXPECT_FALSE(a != b && g.adjacent(a, b));
    }
}

TEST(FindMaximalDeg2Path, Cycle) {
    auto p = find_maximal_deg2_path(cycle_graph(6));
    ASSERT_TRUE(p);
    EXPECT_TRUE(p->is_cycle);
    EXPECT_EQ(p->vertices.size(), 6u);
    EXPECT_EQ(p->vertices.front(), 0u);
}

TEST(FindMaximalDeg2Path, StarHasNone) { EXPECT_FALSE(find_maximal_deg2_path(star_graph(4))); }

TEST(FindMaximalDeg2Path, TwoVertexRunBetweenAnchors) {
    // Anchors 0 and 1 have degree 3; 2-3 is the only run of two degree-2 vertices.
    MultiGraph g = graph_from_edges(6, {{0, 2}, {2, 3}, {3, 1}, {0, 4}, {4, 1}, {0, 5}, {5, 1}});
    auto p = find_maximal_deg2_path(g);
    ASSERT_TRUE(p);
    EXPECT_FALSE(p->is_cycle);
    EXPECT_EQ(p->vertices, (std::vector<VertexId>{2, 3}));
}

TEST(FindMaximalDeg2Path, LoopVerticesExcluded) {
    MultiGraph g(1);
    g.add_edge(0, 0);
    EXPECT_FALSE(find_maximal_deg2_path(g));
}

TEST(PathReplace, CycleBecomesLoop) {
    MultiGraph g = cycle_graph(6);
    auto p = find_maximal_deg2_path(g);
    ASSERT_TRUE(p);
    VertexId vp = path_replace(g, *p);
    EXPECT_EQ(g.vertex_count(), 1u);
    EXPECT_TRUE(g.is_virtual(vp));
    EXPECT_TRUE(g.has_loop(vp));
    EXPECT_EQ(g.degree(vp), 2u);
}

TEST(PathReplace, PathJoinsAnchors) {
    // u=0, v=1 of degree 3 joined by the run x=2, y=3.
    MultiGraph g = graph_from_edges(6, {{0, 2}, {2, 3}, {3, 1}, {0, 4}, {4, 1}, {0, 5}, {5, 1}});
    VertexId vp = path_replace(g, VertexPath{{2, 3}, false});
    EXPECT_FALSE(g.has_vertex(2));
    EXPECT_FALSE(g.has_vertex(3));
    EXPECT_EQ(g.degree(vp), 2u);
    EXPECT_EQ(g.neighbors(vp), (std::vector<VertexId>{0, 1}));
}

TEST(PathReplace, SharedAnchorGivesParallelPair) {
    // Triangles 0-1-2 and 0-3-4 share vertex 0.
    MultiGraph g = graph_from_edges(5, {{0, 1}, {1, 2}, {2, 0}, {0, 3}, {3, 4}, {4, 0}});
    VertexId vp = path_replace(g, VertexPath{{1, 2}, false});
    EXPECT_EQ(g.degree(vp), 2u);
    EXPECT_EQ(g.neighbors(vp), std::vector<VertexId>{0});
    EXPECT_FALSE(g.is_simple());
}

TEST(PathReplace, RejectsInvalidPaths) {
    MultiGraph g = graph_from_edges(6, {{0, 2}, {2, 3}, {3, 1}, {0, 4}, {4, 1}, {0, 5}, {5, 1}});
    EXPECT_THROW(path_replace(g, VertexPath{{2}, false}), std::invalid_argument);     // too short
    EXPECT_THROW(path_replace(g, VertexPath{{0, 2}, false}), std::invalid_argument);  // anchor has degree 3
    EXPECT_THROW(path_replace(g, VertexPath{{2, 4}, false}), std::invalid_argument);  // not adjacent
    MultiGraph p5 = path_graph(5);
    EXPECT_THROW(path_replace(p5, VertexPath{{1, 2}, false}), std::invalid_argument);  // not maximal
}

/// Exhaustive low-degree deletion and contraction.
MultiGraph reduce(MultiGraph g) {
    for (bool changed = true; changed;) {
        changed = false;
        for (VertexId v : g.vertices())
            if (g.degree(v) <= 1) {
                g.remove_vertex(v);
                changed = true;
            }
        while (auto p = find_maximal_deg2_path(g)) {
            path_replace(g, *p);
            changed = true;
        }
    }
    return g;
}

TEST(PathReplace, PreservesCyclesOnAllSmallGraphs) {
    for (const auto& sg : testing::graphs_up_to(8)) {
        MultiGraph g = sg.to_graph();
        auto p = find_maximal_deg2_path(g);
        if (!p) continue;
        const bool before = has_cycle(g);
        MultiGraph h = g;
        VertexId vp = path_replace(h, *p);
        if (p->is_cycle) {
            EXPECT_TRUE(h.has_loop(vp));
        } else {
            ASSERT_EQ(has_cycle(h), before);
        }
    }
}

TEST(PropertyR, HoldsAfterExhaustiveReductionOnAllSmallGraphs) {
    for (const auto& sg : testing::graphs_up_to(8)) {
        MultiGraph h = reduce(sg.to_graph());
        ASSERT_TRUE(h.empty() || has_property_r(h));
    }
}

TEST(InducedSubgraph, KeepsIds) {
    MultiGraph g = cycle_graph(5);
    std::vector<VertexId> keep{1, 2, 4};
    MultiGraph h = induced_subgraph(g, keep);
    EXPECT_EQ(h.vertices(), keep);
    EXPECT_EQ(h.edge_count(), 1u);
    EXPECT_TRUE(h.adjacent(1, 2));
}

TEST(MultiGraph, StableIdsAfterDeletion) {
    MultiGraph g = path_graph(3);
    g.remove_vertex(1);
    VertexId v = g.add_vertex(true);
    EXPECT_EQ(v, 3u);
    EXPECT_TRUE(g.is_virtual(v));
    EXPECT_FALSE(g.has_vertex(1));
    EXPECT_EQ(g.edge_count(), 0u);
}

}  // namespace
}  // namespace ambt
