#include "ambt/reductions.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <string>

namespace ambt {

namespace {

/// Rank of every live vertex in ascending id order.
std::vector<VertexId> ranks(const MultiGraph& g) {
    std::vector<VertexId> rank(g.vertex_id_bound(), 0);
    VertexId r = 0;
    for (VertexId v : g.vertices()) rank[v] = r++;
    return rank;
}

std::size_t gadget_of(const GadgetIndex& index, const Triple& t) {
    auto it = std::lower_bound(index.gadgets.begin(), index.gadgets.end(), t,
                               [](const SetGadget& g, const Triple& key) { return g.set < key; });
    if (it == index.gadgets.end() || it->set != t) throw std::invalid_argument("triple has no gadget in this composition");
    return static_cast<std::size_t>(it - index.gadgets.begin());
}

}  // namespace

DoubledGraph double_with_vertical(const MultiGraph& g) {
    const std::size_t n = g.vertex_count();
    const auto rank = ranks(g);
    DoubledGraph out;
    out.copy_size = n;
    out.graph = MultiGraph(2 * n);
    for (int copy = 0; copy < 2; ++copy)
        for (EdgeId e : g.edges()) {
            const Edge& ed = g.edge(e);
            out.graph.add_edge(static_cast<VertexId>(copy * n + rank[ed.a]), static_cast<VertexId>(copy * n + rank[ed.b]));
        }
    for (std::size_t i = 0; i < n; ++i) {
        const auto a = static_cast<VertexId>(i), b = static_cast<VertexId>(n + i);
        out.graph.add_edge(a, b);
        out.vertical.emplace_back(a, b);
    }
    return out;
}

PandaGraph panda_construct(const MultiGraph& g) {
    if (!g.is_simple()) throw std::invalid_argument("panda_construct: graph must be simple");
    const std::size_t n = g.vertex_count();
    const auto rank = ranks(g);
    PandaGraph out;
    out.copy_size = n;
    out.graph = MultiGraph(2 * n);
    auto add = [&](std::size_t a, std::size_t b, PandaEdgeType type) {
        EdgeId e = out.graph.add_edge(static_cast<VertexId>(a), static_cast<VertexId>(b));
        out.edge_types.resize(e + 1);
        out.edge_types[e] = type;
    };
    for (std::size_t i = 0; i < n; ++i) add(i, n + i, PandaEdgeType::TypeI);
    for (EdgeId e : g.edges()) {
        const std::size_t i = rank[g.edge(e).a], j = rank[g.edge(e).b];
        add(i, j, PandaEdgeType::TypeII);
    }
    for (EdgeId e : g.edges()) {
        const std::size_t i = rank[g.edge(e).a], j = rank[g.edge(e).b];
        add(n + i, j, PandaEdgeType::TypeIII);
        add(n + j, i, PandaEdgeType::TypeIII);
    }
    for (EdgeId e : g.edges()) {
        const std::size_t i = rank[g.edge(e).a], j = rank[g.edge(e).b];
        add(n + i, n + j, PandaEdgeType::TypeIV);
    }
    return out;
}

Composition x3c_compose(const X3CFamily& fam, bool clique_variant) {
    fam.validate();
    const std::uint32_t n = fam.universe;
    const auto sets = fam.union_sets();
    const std::size_t t = fam.instances.size();

    Composition out;
    GadgetIndex& idx = out.index;
    idx.universe = n;
    idx.clique_variant = clique_variant;
    MultiGraph& g = out.graph;
    g = MultiGraph(n);

    auto add = [&](VertexId a, VertexId b, CompositionEdge cls) {
        EdgeId e = g.add_edge(a, b);
        idx.edge_classes.resize(e + 1);
        idx.edge_classes[e] = cls;
    };

    for (const Triple& s : sets) {
        SetGadget gad;
        gad.set = s;
        for (int k = 0; k < 3; ++k) gad.interface[k] = g.add_vertex();
        gad.hub_u = g.add_vertex();
        gad.hub_w = g.add_vertex();
        gad.pendant_u = g.add_vertex();
        gad.pendant_w = g.add_vertex();
        for (VertexId x : gad.interface) {
            add(x, gad.hub_u, CompositionEdge::Gadget);
            add(x, gad.hub_w, CompositionEdge::Gadget);
        }
        add(gad.hub_u, gad.hub_w, CompositionEdge::Gadget);
        add(gad.hub_u, gad.pendant_u, CompositionEdge::Gadget);
        add(gad.hub_w, gad.pendant_w, CompositionEdge::Gadget);
        for (int k = 0; k < 3; ++k) add(gad.interface[k], idx.element_vertex(s[k]), CompositionEdge::Cross);
        idx.gadgets.push_back(gad);
    }

    idx.selector_center = g.add_vertex();
    for (std::size_t i = 0; i < t; ++i) idx.selector_leaves.push_back(g.add_vertex());
    for (VertexId leaf : idx.selector_leaves) add(idx.selector_center, leaf, CompositionEdge::Selector);

    for (std::size_t i = 0; i < t; ++i) {
        std::vector<char> member(sets.size(), 0);
        std::vector<std::size_t> own;
        for (const Triple& s : fam.instances[i].sets) {
            std::size_t j = gadget_of(idx, s);
            member[j] = 1;
            own.push_back(j);
        }
        std::sort(own.begin(), own.end());
        idx.members.push_back(std::move(own));
        for (std::size_t j = 0; j < sets.size(); ++j)
            if (!member[j])
                for (VertexId x : idx.gadgets[j].interface) add(idx.selector_leaves[i], x, CompositionEdge::Upper);
    }

    if (clique_variant)
        for (std::size_t i = 0; i < t; ++i)
            for (std::size_t k = i + 1; k < t; ++k) add(idx.selector_leaves[i], idx.selector_leaves[k], CompositionEdge::Selector);

    out.ell = 2 * sets.size() + 2 * n / 3 + 1;

    std::vector<char> excluded(g.vertex_id_bound(), 0);
    if (clique_variant) {
        // Deleting everything outside P' = {p, p_1..p_t} leaves a clique.
        out.certificate.kind = CompositionCertificate::Kind::CliqueModulator;
        excluded[idx.selector_center] = 1;
    } else {
        // P and X' are independent, so the rest covers every edge.
        out.certificate.kind = CompositionCertificate::Kind::VertexCover;
        for (std::uint32_t a = 1; a <= n; ++a) excluded[idx.element_vertex(a)] = 1;
    }
    for (VertexId leaf : idx.selector_leaves) excluded[leaf] = 1;
    for (VertexId v : g.vertices())
        if (!excluded[v]) out.certificate.vertices.push_back(v);
    return out;
}

Matching x3c_solution_to_matching(const GadgetIndex& index, const X3CFamily& fam, const std::vector<Triple>& solution,
                                  std::size_t q) {
    if (q >= fam.instances.size() || q >= index.selector_leaves.size())
        throw std::invalid_argument("x3c_solution_to_matching: instance index out of range");
    const auto& own = fam.instances[q].sets;
    std::vector<int> hits(index.universe + 1, 0);
    std::vector<char> chosen(index.gadgets.size(), 0);
    for (const Triple& s : solution) {
        if (std::find(own.begin(), own.end(), s) == own.end())
            throw std::invalid_argument("x3c_solution_to_matching: triple not in the selected instance");
        std::size_t j = gadget_of(index, s);
        if (chosen[j]) throw std::invalid_argument("x3c_solution_to_matching: triple listed twice");
        chosen[j] = 1;
        for (std::uint32_t a : s) ++hits[a];
    }
    for (std::uint32_t a = 1; a <= index.universe; ++a)
        if (hits[a] != 1) throw std::invalid_argument("x3c_solution_to_matching: not an exact cover (element " + std::to_string(a) + ")");

    Matching m;
    for (std::size_t j = 0; j < index.gadgets.size(); ++j) {
        const SetGadget& gad = index.gadgets[j];
        if (chosen[j]) {
            for (int k = 0; k < 3; ++k) m.add(gad.interface[k], index.element_vertex(gad.set[k]));
            m.add(gad.hub_u, gad.pendant_u);
        } else {
            m.add(gad.hub_u, gad.pendant_u);
            m.add(gad.hub_w, gad.pendant_w);
        }
    }
    m.add(index.selector_leaves[q], index.selector_center);
    return m;
}

std::vector<GadgetStatus> classify_gadgets(const GadgetIndex& index, const Matching& m) {
    std::map<VertexId, VertexId> partner;
    for (auto [a, b] : m.pairs()) {
        partner[a] = b;
        partner[b] = a;
    }
    std::vector<char> is_leaf;
    for (VertexId leaf : index.selector_leaves) {
        if (leaf >= is_leaf.size()) is_leaf.resize(leaf + 1, 0);
        is_leaf[leaf] = 1;
    }
    std::vector<GadgetStatus> out(index.gadgets.size());
    for (std::size_t j = 0; j < index.gadgets.size(); ++j)
        for (VertexId x : index.gadgets[j].interface) {
            auto it = partner.find(x);
            if (it == partner.end()) continue;
            if (it->second < index.universe) out[j].happy = true;
            if (it->second < is_leaf.size() && is_leaf[it->second]) out[j].touched = true;
        }
    return out;
}

MultiGraph apply_kernel_rules(const MultiGraph& g) {
    if (!g.is_simple()) throw std::invalid_argument("apply_kernel_rules: graph must be simple");
    MultiGraph h = g;
    for (;;) {
        const auto verts = h.vertices();
        std::optional<VertexId> victim;

        for (VertexId v : verts)
            if (h.degree(v) == 0) {
                victim = v;
                break;
            }

        if (!victim) {
            // R1: degree-1 vertices whose neighbor has another degree-1 neighbor.
            std::map<VertexId, std::size_t> leaves_at;
            for (VertexId v : verts)
                if (h.degree(v) == 1) ++leaves_at[h.neighbors(v).front()];
            for (VertexId v : verts)
                if (h.degree(v) == 1 && leaves_at[h.neighbors(v).front()] >= 2) {
                    victim = v;
                    break;
                }
        }

        if (!victim) {
            // R2: degree-2 vertices sharing their neighbor pair with another one.
            std::map<std::vector<VertexId>, std::size_t> twins;
            for (VertexId v : verts)
                if (h.degree(v) == 2) ++twins[h.neighbors(v)];
            for (VertexId v : verts)
                if (h.degree(v) == 2 && twins[h.neighbors(v)] >= 2) {
                    victim = v;
                    break;
                }
        }

        if (!victim) return h;
        h.remove_vertex(*victim);
    }
}

}  // namespace ambt
