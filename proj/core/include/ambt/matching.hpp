#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <string_view>
#include <utility>
#include <vector>

#include "ambt/graph.hpp"

namespace ambt {

using VertexPair = std::pair<VertexId, VertexId>;

/// A set of unordered vertex pairs. Pairs are stored with the smaller id
/// first and kept sorted, so two matchings with the same pairs compare equal.
/// Disjointness and edge membership are properties of a host graph and are
/// checked by is_matching(), not here.
class Matching {
public:
    Matching() = default;
    Matching(std::initializer_list<VertexPair> pairs);
    explicit Matching(std::span<const VertexPair> pairs);

    /// Throws std::invalid_argument for u == v. Re-adding a pair is a no-op.
    void add(VertexId u, VertexId v);
    bool contains(VertexId u, VertexId v) const;

    const std::vector<VertexPair>& pairs() const { return pairs_; }
    std::size_t size() const { return pairs_.size(); }
    bool empty() const { return pairs_.empty(); }

    /// Endpoints of all pairs, ascending.
    std::vector<VertexId> saturated() const;

    bool operator==(const Matching&) const = default;

private:
    std::vector<VertexPair> pairs_;
};

enum class MatchingKind { Acyclic, Induced, UniquelyRestricted };

std::string_view to_string(MatchingKind kind);

struct IndependentSetCert {
    enum class Source { Acyclic, UniquelyRestricted };

    std::vector<VertexId> vertices;
    Source source = Source::Acyclic;
};

/// Every pair is an edge of g and no vertex appears twice.
bool is_matching(const MultiGraph& g, const Matching& m);

// The restricted-class checks below throw std::invalid_argument when m is
// not a matching of g.

/// G[V_M] is a forest.
bool is_acyclic_matching(const MultiGraph& g, const Matching& m);
/// G[V_M] has exactly |M| edges.
bool is_induced_matching(const MultiGraph& g, const Matching& m);
/// Some even cycle of g alternates between matched and unmatched edges.
bool has_alternating_cycle(const MultiGraph& g, const Matching& m);
/// Uniquely restricted: no alternating cycle.
bool is_ur_matching(const MultiGraph& g, const Matching& m);

bool is_restricted_matching(const MultiGraph& g, const Matching& m, MatchingKind kind);

bool is_independent_set(const MultiGraph& g, std::span<const VertexId> vertices);

/// Independent set of size exactly |M| taken from the two-coloring of the
/// forest G[V_M] (per component, the side holding the lowest vertex id).
/// Throws std::invalid_argument if m is not an acyclic matching.
IndependentSetCert acyclic_to_independent(const MultiGraph& g, const Matching& m);

/// Independent set of size at least (|M|+1)/2 from a uniquely restricted
/// matching, by repeatedly deleting a matched bridge of G[V_M] (keeping the
/// pendant endpoint when the bridge is a pendant edge) until every component
/// has fewer than four vertices, then keeping one vertex per component.
/// Throws std::invalid_argument if m is not uniquely restricted.
IndependentSetCert ur_to_independent(const MultiGraph& g, const Matching& m);

/// Every vertex of g lies within distance `radius` of an M-saturated vertex.
bool check_distance_property(const MultiGraph& g, const Matching& m, unsigned radius);

}  // namespace ambt
