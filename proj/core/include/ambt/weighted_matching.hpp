#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "ambt/graph.hpp"
#include "ambt/matching.hpp"

namespace ambt {

using Weight = std::int64_t;

/// Graph with a weight per edge id and a target total. `weights` is indexed
/// by edge id and must cover every live edge; entries of dead ids are ignored.
struct WeightedInstance {
    MultiGraph graph;
    std::vector<Weight> weights;
    Weight target = 0;

    Weight weight(EdgeId e) const { return weights.at(e); }
};

struct WeightedMatching {
    Matching matching;
    std::vector<EdgeId> edges;  // ascending
    Weight total = 0;
};

/// Exact maximum-weight matching (primal-dual blossom method, O(n^3)).
/// Throws std::invalid_argument if the graph has loops or parallel edges, a
/// live edge has no weight or a weight is negative.
WeightedMatching max_weight_matching(const WeightedInstance& inst);

/// A maximum-weight matching if its total reaches inst.target.
std::optional<WeightedMatching> meets_target(const WeightedInstance& inst);

/// Maximum-cardinality matching of a simple graph (unit weights).
Matching maximum_cardinality_matching(const MultiGraph& g);

}  // namespace ambt
