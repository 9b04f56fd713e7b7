#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "ambt/graph.hpp"
#include "ambt/random.hpp"

namespace ambt {

/// Simple graph on vertices 0..n-1 with the given edges.
MultiGraph graph_from_edges(std::size_t n, const std::vector<std::pair<VertexId, VertexId>>& edges);

MultiGraph path_graph(std::size_t n);
MultiGraph cycle_graph(std::size_t n);
MultiGraph complete_graph(std::size_t n);
/// Star K_{1,leaves}; vertex 0 is the center.
MultiGraph star_graph(std::size_t leaves);

/// Erdos-Renyi G(n, p). Pairs are visited in lexicographic order so the
/// result depends only on the rng state.
MultiGraph random_graph(std::size_t n, double p, Rng& rng);

/// Disjoint union; vertices of b are shifted by a.vertex_id_bound().
MultiGraph disjoint_union(const MultiGraph& a, const MultiGraph& b);

}  // namespace ambt
