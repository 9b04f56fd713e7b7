#include "ambt/builders.hpp"

#include <stdexcept>

namespace ambt {

MultiGraph graph_from_edges(std::size_t n, const std::vector<std::pair<VertexId, VertexId>>& edges) {
    MultiGraph g(n);
    for (auto [a, b] : edges) g.add_edge(a, b);
    return g;
}

MultiGraph path_graph(std::size_t n) {
    MultiGraph g(n);
    for (std::size_t i = 0; i + 1 < n; ++i) g.add_edge(static_cast<VertexId>(i), static_cast<VertexId>(i + 1));
    return g;
}

MultiGraph cycle_graph(std::size_t n) {
    if (n < 3) throw std::invalid_argument("cycle_graph: need at least 3 vertices");
    MultiGraph g = path_graph(n);
    g.add_edge(static_cast<VertexId>(n - 1), 0);
    return g;
}

MultiGraph complete_graph(std::size_t n) {
    MultiGraph g(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) g.add_edge(static_cast<VertexId>(i), static_cast<VertexId>(j));
    return g;
}

MultiGraph star_graph(std::size_t leaves) {
    MultiGraph g(leaves + 1);
    for (std::size_t i = 1; i <= leaves; ++i) g.add_edge(0, static_cast<VertexId>(i));
    return g;
}

MultiGraph random_graph(std::size_t n, double p, Rng& rng) {
    if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("random_graph: p must lie in [0, 1]");
    MultiGraph g(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (rng.bernoulli(p)) g.add_edge(static_cast<VertexId>(i), static_cast<VertexId>(j));
    return g;
}

MultiGraph disjoint_union(const MultiGraph& a, const MultiGraph& b) {
    MultiGraph g = a;
    const VertexId shift = a.vertex_id_bound();
    const VertexId bound = b.vertex_id_bound();
    for (VertexId v = 0; v < bound; ++v) {
        VertexId id = g.add_vertex(b.has_vertex(v) && b.is_virtual(v));
        if (!b.has_vertex(v)) g.remove_vertex(id);
    }
    for (EdgeId e : b.edges()) g.add_edge(b.edge(e).a + shift, b.edge(e).b + shift);
    return g;
}

}  // namespace ambt
