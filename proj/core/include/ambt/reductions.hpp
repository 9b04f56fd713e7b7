#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "ambt/graph.hpp"
#include "ambt/matching.hpp"
#include "ambt/x3c.hpp"

// The generators below number their output vertices from 0. When an input
// graph has gaps in its ids, its vertex of rank i (ascending id order) plays
// the role of v_i.

namespace ambt {

/// Two copies of g joined by a perfect matching of vertical edges: copy one
/// holds vertex i, copy two holds vertex copy_size + i, and the vertical
/// edge of v_i is {i, copy_size + i}.
struct DoubledGraph {
    MultiGraph graph;
    std::vector<VertexPair> vertical;
    std::size_t copy_size = 0;
};

DoubledGraph double_with_vertical(const MultiGraph& g);

enum class PandaEdgeType {
    TypeI,    // v_i v'_i
    TypeII,   // v_i v_j for v_i v_j in E(G)
    TypeIII,  // v'_i v_j for v_j in N(v_i)
    TypeIV,   // v'_i v'_j for v_i v_j in E(G)
};

/// v_i is vertex i, v'_i is vertex copy_size + i. edge_types is indexed by
/// edge id.
struct PandaGraph {
    MultiGraph graph;
    std::vector<PandaEdgeType> edge_types;
    std::size_t copy_size = 0;
};

/// Throws std::invalid_argument if g is not simple.
PandaGraph panda_construct(const MultiGraph& g);

enum class CompositionEdge { Cross, Upper, Gadget, Selector };

struct SetGadget {
    Triple set;
    std::array<VertexId, 3> interface;  // u_ja, u_jb, u_jc in element order
    VertexId hub_u = 0, hub_w = 0;        // u_j, w_j
    VertexId pendant_u = 0, pendant_w = 0;  // u'_j, w'_j
};

/// Vertex layout of a composed graph: v_1..v_n are 0..n-1, then seven
/// vertices per gadget (u_ja, u_jb, u_jc, u_j, w_j, u'_j, w'_j) in gadget
/// order, then p, then p_1..p_t.
struct GadgetIndex {
    std::uint32_t universe = 0;
    std::vector<SetGadget> gadgets;              // s_1..s_|C|
    std::vector<std::vector<std::size_t>> members;  // per instance: gadget indices of its triples
    VertexId selector_center = 0;                // p
    std::vector<VertexId> selector_leaves;       // p_1..p_t
    std::vector<CompositionEdge> edge_classes;   // by edge id
    bool clique_variant = false;

    VertexId element_vertex(std::uint32_t a) const { return a - 1; }
};

/// The structural bound a composed graph is certified with: a vertex cover
/// for the plain construction, a clique modulator for the clique variant.
struct CompositionCertificate {
    enum class Kind { VertexCover, CliqueModulator };
    Kind kind = Kind::VertexCover;
    std::vector<VertexId> vertices;  // ascending
};

struct Composition {
    MultiGraph graph;
    std::size_t ell = 0;
    GadgetIndex index;
    CompositionCertificate certificate;
};

/// Composes the family into one graph whose acyclic matchings of size ell
/// correspond to solutions of some member instance. With clique_variant the
/// selector leaves form a clique. Throws std::invalid_argument if the family
/// fails validation.
Composition x3c_compose(const X3CFamily& fam, bool clique_variant);

/// The matching certified by an exact cover of instance q (0-based): three
/// cross edges and u_j u'_j per chosen triple, u_k u'_k and w_k w'_k for
/// every other gadget, and p_q p. `solution` lists triples of instance q.
/// Throws std::invalid_argument if it is not an exact cover drawn from it.
Matching x3c_solution_to_matching(const GadgetIndex& index, const X3CFamily& fam, const std::vector<Triple>& solution,
                                  std::size_t q);

struct GadgetStatus {
    bool happy = false;    // an interface vertex is matched through a cross edge
    bool touched = false;  // an interface vertex is matched through an upper edge
};

std::vector<GadgetStatus> classify_gadgets(const GadgetIndex& index, const Matching& m);

/// Applies R0 (delete an isolated vertex), R1 (of two degree-1 neighbors of
/// a vertex delete one) and R2 (of two degree-2 common neighbors of a pair
/// delete one) until none applies. Every step applies the first applicable
/// rule in that order and deletes the lowest eligible id. Throws
/// std::invalid_argument if g is not simple.
MultiGraph apply_kernel_rules(const MultiGraph& g);

}  // namespace ambt
