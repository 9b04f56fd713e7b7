#include <gtest/gtest.h>

#include <algorithm>
#include <set>
#include <stdexcept>

#include "ambt/builders.hpp"
#include "ambt/oracles.hpp"
#include "ambt/reductions.hpp"
#include "catalog.hpp"

namespace ambt {
namespace {

std::set<VertexPair> edge_set(const MultiGraph& g) {
    std::set<VertexPair> out;
    for (EdgeId e : g.edges()) {
        const auto& ed = g.edge(e);
        const VertexId a = ed.a, b = ed.b;
        out.insert({std::min(a, b), std::max(a, b)});
    }
    return out;
}

bool is_clique(const MultiGraph& g, const std::vector<VertexId>& s) {
    for (std::size_t i = 0; i < s.size(); ++i)
        for (std::size_t j = i + 1; j < s.size(); ++j)
            if (!g.adjacent(s[i], s[j])) return false;
    return true;
}

X3CFamily single_triple() {
    X3CFamily fam;
    fam.universe = 3;
    fam.instances.push_back({{make_triple(1, 2, 3)}});
    return fam;
}

// Instance 1 cannot cover element 6; instance 2 can.
X3CFamily two_instances() {
    X3CFamily fam;
    fam.universe = 6;
    fam.instances.push_back({{make_triple(1, 2, 3), make_triple(2, 4, 5)}});
    fam.instances.push_back({{make_triple(1, 2, 3), make_triple(4, 5, 6)}});
    return fam;
}

TEST(DoubleWithVertical, Examples) {
    auto k2 = double_with_vertical(complete_graph(2));
    EXPECT_EQ(edge_set(k2.graph), (std::set<VertexPair>{{0, 1}, {2, 3}, {0, 2}, {1, 3}}));
    EXPECT_EQ(k2.vertical, (std::vector<VertexPair>{{0, 2}, {1, 3}}));

    auto one = double_with_vertical(MultiGraph(1));
    EXPECT_EQ(edge_set(one.graph), (std::set<VertexPair>{{0, 1}}));

    auto prism = double_with_vertical(complete_graph(3));
    EXPECT_EQ(prism.graph.edge_count(), 9u);
    for (VertexId v : prism.graph.vertices()) EXPECT_EQ(prism.graph.degree(v), 3u);
    EXPECT_EQ(edge_set(prism.graph),
              (std::set<VertexPair>{{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}, {0, 3}, {1, 4}, {2, 5}}));
}

TEST(DoubleWithVertical, RenumbersByRank) {
    MultiGraph g = path_graph(3);
    g.remove_vertex(0);
    auto d = double_with_vertical(g);
    EXPECT_EQ(edge_set(d.graph), (std::set<VertexPair>{{0, 1}, {2, 3}, {0, 2}, {1, 3}}));
}

TEST(PandaConstruct, K2) {
    auto h = panda_construct(complete_graph(2));
    EXPECT_EQ(h.graph.vertex_count(), 4u);
    EXPECT_EQ(edge_set(h.graph), (std::set<VertexPair>{{0, 1}, {0, 2}, {1, 3}, {1, 2}, {0, 3}, {2, 3}}));
    std::vector<int> per_type(4, 0);
    for (EdgeId e : h.graph.edges()) ++per_type[static_cast<int>(h.edge_types[e])];
    EXPECT_EQ(per_type, (std::vector<int>{2, 1, 2, 1}));
}

TEST(PandaConstruct, EdgelessGivesTypeOneMatching) {
    auto h = panda_construct(MultiGraph(5));
    EXPECT_EQ(h.graph.edge_count(), 5u);
    for (EdgeId e : h.graph.edges()) {
        EXPECT_EQ(h.edge_types[e], PandaEdgeType::TypeI);
        EXPECT_EQ(h.graph.edge(e).b, h.graph.edge(e).a + 5);
    }
    MultiGraph loop(1);
    loop.add_edge(0, 0);
    EXPECT_THROW(panda_construct(loop), std::invalid_argument);
}

TEST(PandaConstruct, IndependenceMatchesAcyclicOnSmallGraphs) {
    for (const auto& sg : testing::graphs_up_to(5)) {
        MultiGraph g = sg.to_graph();
        auto h = panda_construct(g);
        const auto is_h = max_independent_set(h.graph).optimum;
        const auto am_h = max_restricted_matching(h.graph, MatchingKind::Acyclic).optimum;
        ASSERT_EQ(is_h, am_h);
        ASSERT_EQ(max_independent_set(g).optimum, am_h);
    }
}

TEST(X3CCompose, SingleTriple) {
    auto c = x3c_compose(single_triple(), false);
    EXPECT_EQ(c.graph.vertex_count(), 12u);
    EXPECT_EQ(c.ell, 5u);
    ASSERT_EQ(c.index.gadgets.size(), 1u);
    const auto& gad = c.index.gadgets[0];
    EXPECT_EQ(gad.interface, (std::array<VertexId, 3>{3, 4, 5}));
    EXPECT_EQ(c.index.selector_center, 10u);
    EXPECT_EQ(c.index.selector_leaves, (std::vector<VertexId>{11}));
    // K_{2,3} (6) + hub edge + 2 pendants + 3 cross + 1 selector; the only
    // instance holds every triple so there are no upper edges.
    EXPECT_EQ(c.graph.edge_count(), 13u);
    for (int k = 0; k < 3; ++k) EXPECT_TRUE(c.graph.adjacent(gad.interface[k], static_cast<VertexId>(k)));
}

TEST(X3CCompose, CrossAndUpperEdges) {
    const auto fam = two_instances();
    auto c = x3c_compose(fam, false);
    const auto& idx = c.index;
    ASSERT_EQ(idx.gadgets.size(), 3u);
    for (EdgeId e : c.graph.edges()) {
        const VertexId a = c.graph.edge(e).a, b = c.graph.edge(e).b;
        if (idx.edge_classes[e] == CompositionEdge::Cross) {
            VertexId x = std::min(a, b), iface = std::max(a, b);
            bool ok = false;
            for (const auto& gad : idx.gadgets)
                for (int k = 0; k < 3; ++k)
                    if (gad.interface[k] == iface && idx.element_vertex(gad.set[k]) == x) ok = true;
            EXPECT_TRUE(ok);
        }
    }
    for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 3; ++j) {
            const auto& own = fam.instances[i].sets;
            const bool member = std::find(own.begin(), own.end(), idx.gadgets[j].set) != own.end();
            for (VertexId x : idx.gadgets[j].interface) EXPECT_EQ(c.graph.adjacent(idx.selector_leaves[i], x), !member);
        }
    EXPECT_EQ(idx.members, (std::vector<std::vector<std::size_t>>{{0, 1}, {0, 2}}));
}

TEST(X3CCompose, Certificates) {
    for (const auto& fam : {single_triple(), two_instances()}) {
        const std::size_t sets = fam.union_sets().size();
        auto plain = x3c_compose(fam, false);
        EXPECT_EQ(plain.certificate.kind, CompositionCertificate::Kind::VertexCover);
        EXPECT_EQ(plain.certificate.vertices.size(), 7 * sets + 1);
        std::vector<char> in(plain.graph.vertex_id_bound(), 0);
        for (VertexId v : plain.certificate.vertices) in[v] = 1;
        for (EdgeId e : plain.graph.edges()) EXPECT_TRUE(in[plain.graph.edge(e).a] || in[plain.graph.edge(e).b]);

        auto clique = x3c_compose(fam, true);
        EXPECT_EQ(clique.certificate.kind, CompositionCertificate::Kind::CliqueModulator);
        EXPECT_EQ(clique.certificate.vertices.size(), 7 * sets + fam.universe);
        std::vector<VertexId> rest{clique.index.selector_center};
        rest.insert(rest.end(), clique.index.selector_leaves.begin(), clique.index.selector_leaves.end());
        EXPECT_TRUE(is_clique(clique.graph, rest));
    }
}

TEST(X3CSolutionToMatching, SingleTriple) {
    const auto fam = single_triple();
    auto c = x3c_compose(fam, false);
    Matching m = x3c_solution_to_matching(c.index, fam, {make_triple(1, 2, 3)}, 0);
    EXPECT_EQ(m.size(), c.ell);
    EXPECT_TRUE(is_matching(c.graph, m));
    EXPECT_TRUE(is_acyclic_matching(c.graph, m));
    EXPECT_EQ(max_restricted_matching(c.graph, MatchingKind::Acyclic).optimum, 5);

    auto status = classify_gadgets(c.index, m);
    EXPECT_TRUE(status[0].happy);
    EXPECT_FALSE(status[0].touched);
    status = classify_gadgets(c.index, Matching{});
    EXPECT_FALSE(status[0].happy || status[0].touched);
}

TEST(X3CSolutionToMatching, SecondInstanceUsesItsSelector) {
    const auto fam = two_instances();
    for (bool clique : {false, true}) {
        auto c = x3c_compose(fam, clique);
        Matching m = x3c_solution_to_matching(c.index, fam, {make_triple(1, 2, 3), make_triple(4, 5, 6)}, 1);
        EXPECT_TRUE(m.contains(c.index.selector_leaves[1], c.index.selector_center));
        EXPECT_EQ(m.size(), c.ell);
        EXPECT_EQ(c.ell, 4u * 6 / 3 + 2 * (3 - 6 / 3) + 1);
        EXPECT_TRUE(is_acyclic_matching(c.graph, m));
        auto status = classify_gadgets(c.index, m);
        EXPECT_TRUE(status[0].happy && status[2].happy);
        EXPECT_FALSE(status[1].happy);
    }
    auto c = x3c_compose(fam, false);
    EXPECT_THROW(x3c_solution_to_matching(c.index, fam, {make_triple(1, 2, 3), make_triple(4, 5, 6)}, 0),
                 std::invalid_argument);
    EXPECT_THROW(x3c_solution_to_matching(c.index, fam, {make_triple(1, 2, 3)}, 1), std::invalid_argument);
    EXPECT_THROW(x3c_solution_to_matching(c.index, fam, {}, 2), std::invalid_argument);
}

TEST(ClassifyGadgets, UpperEdgeTouches) {
    const auto fam = two_instances();
    auto c = x3c_compose(fam, false);
    // Leaf p_1 sees gadget 2 (the triple {4,5,6}) through upper edges.
    Matching m{{c.index.selector_leaves[0], c.index.gadgets[2].interface[1]}};
    ASSERT_TRUE(is_matching(c.graph, m));
    auto status = classify_gadgets(c.index, m);
    EXPECT_TRUE(status[2].touched);
    EXPECT_FALSE(status[2].happy);
    EXPECT_FALSE(status[0].touched || status[1].touched);
}

// No instance has an exact cover, so no acyclic matching reaches ell.
TEST(X3CCompose, UnsolvableFamilyFallsShort) {
    X3CFamily fam;
    fam.universe = 6;
    fam.instances.push_back({{make_triple(1, 2, 3), make_triple(3, 4, 5)}});
    ASSERT_FALSE(solve_x3c(6, fam.instances[0].sets).has_value());
    for (bool clique : {false, true}) {
        auto c = x3c_compose(fam, clique);
        EXPECT_EQ(c.graph.vertex_count(), 22u);
        const auto best = max_restricted_matching(c.graph, MatchingKind::Acyclic, {.max_vertices = 22}).optimum;
        EXPECT_LT(best, static_cast<std::int64_t>(c.ell));
    }
}

TEST(X3CCompose, RejectsInvalidFamilies) {
    X3CFamily bad;
    bad.universe = 4;
    bad.instances.push_back({{make_triple(1, 2, 3)}});
    EXPECT_THROW(x3c_compose(bad, false), std::invalid_argument);
    X3CFamily twins = single_triple();
    twins.instances.push_back(twins.instances[0]);
    EXPECT_THROW(x3c_compose(twins, false), std::invalid_argument);
}

TEST(KernelRules, Examples) {
    MultiGraph iso = cycle_graph(5);
    iso.add_vertex();
    EXPECT_EQ(apply_kernel_rules(iso).vertices(), (std::vector<VertexId>{0, 1, 2, 3, 4}));

    MultiGraph star = star_graph(2);
    auto reduced = apply_kernel_rules(star);
    EXPECT_EQ(reduced.vertices(), (std::vector<VertexId>{0, 2}));

    // C4 0-1-2-3 with a second path 0-4-2: vertices 1, 3 and 4 all have
    // neighbours {0, 2}. R2 removes 1 and 3, then 0 and 2 are leaves of 4
    // and R1 removes 0.
    MultiGraph c4 = graph_from_edges(5, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {0, 4}, {4, 2}});
    auto k = apply_kernel_rules(c4);
    EXPECT_EQ(k.vertices(), (std::vector<VertexId>{2, 4}));

    EXPECT_EQ(apply_kernel_rules(cycle_graph(5)).vertex_count(), 5u);
    MultiGraph loop(1);
    loop.add_edge(0, 0);
    EXPECT_THROW(apply_kernel_rules(loop), std::invalid_argument);
}

TEST(KernelRules, PreserveOptimaOnSmallGraphs) {
    for (const auto& sg : testing::graphs_up_to(6)) {
        MultiGraph g = sg.to_graph();
        MultiGraph h = apply_kernel_rules(g);
        for (auto kind : {MatchingKind::Acyclic, MatchingKind::Induced, MatchingKind::UniquelyRestricted})
            ASSERT_EQ(max_restricted_matching(g, kind).optimum, max_restricted_matching(h, kind).optimum);
    }
}

}  // namespace
}  // namespace ambt
