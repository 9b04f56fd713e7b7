#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace ambt {

using VertexId = std::uint32_t;
using EdgeId = std::uint32_t;

struct Edge {
    EdgeId id = 0;
    VertexId a = 0;
    VertexId b = 0;

    bool is_loop() const { return a == b; }
    VertexId other(VertexId v) const { return v == a ? b : a; }
};

/// Undirected multigraph with stable ids.
///
/// Vertex and edge ids are handed out in increasing order and never reused,
/// so ids recorded before a deletion stay unambiguous afterwards. Self-loops
/// and parallel edges are representable. A self-loop is stored twice in the
/// incidence list of its vertex, which makes degree() the number of
/// edge-endpoint incidences (a loop contributes 2).
class MultiGraph {
public:
    MultiGraph() = default;
    /// Graph with vertices 0..n-1 and no edges.
    explicit MultiGraph(std::size_t n);

    VertexId add_vertex(bool is_virtual = false);
    EdgeId add_edge(VertexId a, VertexId b);
    void remove_edge(EdgeId e);
    /// Removes v together with every incident edge.
    void remove_vertex(VertexId v);

    bool has_vertex(VertexId v) const;
    bool has_edge(EdgeId e) const;
    bool is_virtual(VertexId v) const;

    std::size_t vertex_count() const { return vertex_count_; }
    std::size_t edge_count() const { return edge_count_; }
    bool empty() const { return vertex_count_ == 0; }

    /// One past the largest vertex id ever allocated; sizes id-indexed arrays.
    VertexId vertex_id_bound() const { return static_cast<VertexId>(vertices_.size()); }
    EdgeId edge_id_bound() const { return static_cast<EdgeId>(edges_.size()); }

    /// Live vertex ids in ascending order.
    std::vector<VertexId> vertices() const;
    /// Live edge ids in ascending order.
    std::vector<EdgeId> edges() const;

    const Edge& edge(EdgeId e) const;
    std::span<const EdgeId> incident(VertexId v) const;
    std::size_t degree(VertexId v) const;
    /// Distinct neighbors in ascending order; v itself is listed iff it has a loop.
    std::vector<VertexId> neighbors(VertexId v) const;

    /// Lowest-id edge joining a and b, if any.
    std::optional<EdgeId> find_edge(VertexId a, VertexId b) const;
    bool adjacent(VertexId a, VertexId b) const { return find_edge(a, b).has_value(); }
    bool has_loop(VertexId v) const;
    /// No self-loops and no parallel edges.
    bool is_simple() const;

private:
    struct VertexSlot {
        bool alive = false;
        bool is_virtual = false;
        std::vector<EdgeId> incident;
    };
    struct EdgeSlot {
        Edge edge;
        bool alive = false;
    };

    const VertexSlot& slot(VertexId v) const;

    std::vector<VertexSlot> vertices_;
    std::vector<EdgeSlot> edges_;
    std::size_t vertex_count_ = 0;
    std::size_t edge_count_ = 0;
};

/// Ordered run of degree-2 vertices. When is_cycle is set the run closes on
/// itself (last vertex adjacent to the first).
struct VertexPath {
    std::vector<VertexId> vertices;
    bool is_cycle = false;

    bool operator==(const VertexPath&) const = default;
};

struct Bipartition {
    std::vector<VertexId> first;
    std::vector<VertexId> second;
};

/// Number of edge-endpoint incidences at v. Throws std::out_of_range for an
/// unknown vertex.
std::size_t degree(const MultiGraph& g, VertexId v);

/// True iff g has a simple cycle, a pair of parallel edges or a self-loop.
bool has_cycle(const MultiGraph& g);

/// True iff the subgraph induced by subset is acyclic.
bool is_forest(const MultiGraph& g, std::span<const VertexId> subset);

/// Connected components, each sorted, ordered by smallest member.
std::vector<std::vector<VertexId>> connected_components(const MultiGraph& g);

/// Bridge edges in ascending id order. Loops and parallel edges never qualify.
std::vector<EdgeId> bridges(const MultiGraph& g);

/// Two-coloring of the forest induced by subset. In every component the
/// lowest vertex id lands in `first`. Throws std::invalid_argument when the
/// induced subgraph has a cycle.
Bipartition bipartition_forest(const MultiGraph& g, std::span<const VertexId> subset);

/// Some maximal path of at least two degree-2 vertices (vertices carrying a
/// self-loop never qualify), or a whole degree-2 cycle with is_cycle set.
/// Among candidates the one containing the lowest vertex id is returned.
std::optional<VertexPath> find_maximal_deg2_path(const MultiGraph& g);

/// Contracts a maximal degree-2 path into a fresh virtual vertex of degree 2
/// and returns its id. A degree-2 cycle contracts to a vertex with a
/// self-loop. Throws std::invalid_argument if the path is not a maximal
/// degree-2 path of g.
VertexId path_replace(MultiGraph& g, const VertexPath& path);

/// Copy of g keeping only the vertices in subset; ids are preserved.
MultiGraph induced_subgraph(const MultiGraph& g, std::span<const VertexId> subset);

/// Minimum degree at least 2 and no two adjacent vertices of degree exactly 2.
bool has_property_r(const MultiGraph& g);

}  // namespace ambt
